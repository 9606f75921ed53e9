#include <iostream>

#include "fracg/cli.hpp"

int main(int argc, char** argv) {
    return fracg::run_cli(argc, argv, std::cout, std::cerr);
}
