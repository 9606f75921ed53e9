#ifndef FRACG_CLI_HPP
#define FRACG_CLI_HPP

#include <ostream>

namespace fracg {

/// Entry point of the `fracg` command line tool, factored out so tests can
/// drive it directly. Exit codes: 0 success, 1 argument or domain errors,
/// 2 solver errors (bracket/iteration), 3 verification-suite failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracg

#endif
