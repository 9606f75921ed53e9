#include "fracg/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "fracg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code =
        fracg::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string read_golden_csv(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string body, line;
    while (std::getline(f, line)) {
        if (!line.empty() && line[0] == '#') continue;  // precision notes
        body += line;
        body += '\n';
    }
    return body;
}

}  // namespace

TEST_CASE("gfactor eval") {
    const auto r = run({"gfactor", "eval", "--alpha", "1.0"});
    CHECK(r.code == 0);
    CHECK(r.out == "g_frac(1) = 2\n");

    const auto j = run({"--format", "json", "gfactor", "eval", "--alpha", "0.5"});
    CHECK(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["rows"][0]["g_frac"].get<double>() ==
          doctest::Approx(2.39288105130757489526).epsilon(1e-14));
}

TEST_CASE("gfactor invert") {
    const auto r = run({"--format", "csv", "gfactor", "invert", "--g", "2.00231930436146"});
    CHECK(r.code == 0);
    const auto lines = split(r.out, '\n');
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "g,alpha,residual,iterations,method");
    const auto fields = split(lines[1], ',');
    REQUIRE(fields.size() == 5);
    CHECK(std::abs(std::stod(fields[1]) - 0.998169790606130) <= 1e-12);
}

TEST_CASE("gfactor invert out of bracket exits 2") {
    const auto r = run({"gfactor", "invert", "--g", "1.0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("solver error") != std::string::npos);
}

TEST_CASE("gfactor table matches the golden file byte for byte") {
    const auto r = run({"--format", "csv", "gfactor", "table"});
    CHECK(r.code == 0);
    const std::string golden =
        read_golden_csv(std::string(FRACG_SOURCE_DIR) + "/tests/golden/section6.csv");
    CHECK(r.out == golden);

    // machine output is stable across runs
    const auto again = run({"--format", "csv", "gfactor", "table"});
    CHECK(again.out == r.out);
}

TEST_CASE("machine-mode numbers round trip at 17 significant digits") {
    const auto r = run({"--format", "csv", "gfactor", "table"});
    const auto lines = split(r.out, '\n');
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto fields = split(lines[i], ',');
        for (int col : {2, 3, 4}) {  // g, alpha, residual
            const double v = std::stod(fields[col]);
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            CHECK(fields[col] == buf);
        }
    }
}

TEST_CASE("gfactor table json") {
    const auto r = run({"--format", "json", "gfactor", "table"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["data"] == "embedded");
    CHECK(j["rows"].size() == 5);
    CHECK(j["hierarchy_holds"].get<bool>());
    CHECK(j["comparisons"].size() == 2);
}

TEST_CASE("deriv subcommand") {
    const auto r = run({"--format", "json", "deriv", "--f", "pow:1.5", "--alpha", "0.5",
                        "--x", "1"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["rl"].get<double>() ==
          doctest::Approx(1.329340388).epsilon(1e-5));
    CHECK(j["rows"][0]["deviation"].get<double>() <= 1e-5);

    const auto c = run({"--format", "json", "deriv", "--f", "const:7", "--alpha", "0.3",
                        "--x", "0.5"});
    const auto jc = nlohmann::json::parse(c.out);
    CHECK(std::abs(jc["rows"][0]["gl"].get<double>()) <= 1e-10);
    CHECK(std::abs(jc["rows"][0]["rl"].get<double>()) <= 1e-10);
    CHECK(jc["rows"][0]["closed_form"].get<double>() == 0.0);

    const auto lin = run({"--format", "json", "deriv", "--f", "pow:1", "--alpha", "1.0",
                          "--x", "2"});
    const auto jl = nlohmann::json::parse(lin.out);
    CHECK(jl["rows"][0]["rl"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("deriv argument and domain errors exit 1") {
    CHECK(run({"deriv", "--f", "bogus", "--alpha", "0.5", "--x", "1"}).code == 1);
    CHECK(run({"deriv", "--f", "pow:1", "--alpha", "1.5", "--x", "1"}).code == 1);
    CHECK(run({"deriv", "--f", "pow:1", "--alpha", "0.5", "--x", "-1"}).code == 1);
    CHECK(run({"deriv", "--f", "pow:-2", "--alpha", "0.5", "--x", "1"}).code == 1);
    CHECK(run({"deriv"}).code == 1);  // missing required flags
    CHECK(run({"nonsense"}).code == 1);
}

TEST_CASE("exp and sin catalog entries report no closed form") {
    const auto r = run({"--format", "json", "deriv", "--f", "exp", "--alpha", "0.5",
                        "--x", "0.5"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(!j["rows"][0].contains("closed_form"));
    CHECK(j["rows"][0]["error_estimate"].get<double>() < 1e-3);
}

TEST_CASE("verify passes on the defaults") {
    const auto r = run({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all suites passed") != std::string::npos);
}

TEST_CASE("verify restricted to the classical point") {
    const auto r = run({"verify", "--alpha", "1.0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify machine output is byte-stable for a fixed seed") {
    const auto a = run({"--format", "csv", "verify", "--seed", "99", "--alpha", "0.5"});
    const auto b = run({"--format", "csv", "verify", "--seed", "99", "--alpha", "0.5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify fails on a corrupted dataset") {
    const std::string fixture =
        std::string(FRACG_SOURCE_DIR) + "/tests/data/leptons_corrupted.csv";
    const auto r = run({"--format", "csv", "verify", "--data", fixture});
    CHECK(r.code == 3);
    CHECK(r.out.find("gfactor-golden-table,") != std::string::npos);
    CHECK(r.out.find("false") != std::string::npos);
}

TEST_CASE("FRACG_DATA supplies the dataset path") {
    const std::string fixture =
        std::string(FRACG_SOURCE_DIR) + "/tests/data/leptons_corrupted.csv";
    setenv("FRACG_DATA", fixture.c_str(), 1);
    const auto r = run({"verify"});
    unsetenv("FRACG_DATA");
    CHECK(r.code == 3);
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"gfactor", "--help"}).code == 0);
}
