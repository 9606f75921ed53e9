#include "fracg/leptons.hpp"

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fracg/errors.hpp"

using namespace fracg;

TEST_CASE("embedded dataset") {
    const auto& recs = default_leptons();
    REQUIRE(recs.size() == 3);

    CHECK(recs[0].name == "electron");
    CHECK(recs[0].g_exp == 2.00231930436146);
    CHECK(recs[0].g_qed == 2.00231930436364);
    CHECK(!recs[0].mean_life_s.has_value());  // stable

    CHECK(recs[1].name == "muon");
    CHECK(recs[1].g_exp == 2.00233184182);
    CHECK(recs[1].mean_life_s == 1.0e-6);

    CHECK(recs[2].name == "tau");
    CHECK(!recs[2].g_exp.has_value());
    CHECK(recs[2].g_qed == 2.00235442);
    CHECK(recs[2].source_qed == "qed-prediction");
}

TEST_CASE("record validation") {
    LeptonRecord r;
    r.name = "electron";
    CHECK_THROWS_AS(validate(r), DomainError);  // no g at all
    r.g_exp = 2.5;
    CHECK_THROWS_AS(validate(r), DomainError);  // outside (2.0, 2.01)
    r.g_exp = 2.002;
    CHECK_NOTHROW(validate(r));
    r.name.clear();
    CHECK_THROWS_AS(validate(r), DomainError);
}

TEST_CASE("loading the shipped data file matches the embedded dataset") {
    const auto recs = load_leptons(std::string(FRACG_SOURCE_DIR) + "/data/leptons.csv");
    const auto& def = default_leptons();
    REQUIRE(recs.size() == def.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].name == def[i].name);
        CHECK(recs[i].g_exp == def[i].g_exp);
        CHECK(recs[i].g_qed == def[i].g_qed);
        CHECK(recs[i].mean_life_s == def[i].mean_life_s);
    }
}

TEST_CASE("loader error paths") {
    CHECK_THROWS_AS(load_leptons("/nonexistent/leptons.csv"), std::runtime_error);

    const std::string dir = "/tmp/fracg_test_data";
    std::filesystem::create_directories(dir);

    auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream f(dir + "/" + name);
        f << body;
        return dir + "/" + name;
    };

    CHECK_THROWS_AS(load_leptons(write("bad_header.csv", "foo,bar\n")), std::runtime_error);
    CHECK_THROWS_AS(
        load_leptons(write("short_row.csv",
                           "name,g_exp,g_qed,mean_life_s,source_exp,source_qed\n"
                           "electron,2.002\n")),
        std::runtime_error);
    CHECK_THROWS_AS(
        load_leptons(write("bad_number.csv",
                           "name,g_exp,g_qed,mean_life_s,source_exp,source_qed\n"
                           "electron,abc,,stable,,\n")),
        std::runtime_error);
    CHECK_THROWS_AS(
        load_leptons(write("bad_range.csv",
                           "name,g_exp,g_qed,mean_life_s,source_exp,source_qed\n"
                           "electron,2.5,,stable,,\n")),
        DomainError);
    CHECK_THROWS_AS(
        load_leptons(write("empty.csv",
                           "name,g_exp,g_qed,mean_life_s,source_exp,source_qed\n")),
        std::runtime_error);

    // comments and blank lines are fine
    const auto ok = load_leptons(
        write("ok.csv",
              "# comment\n"
              "name,g_exp,g_qed,mean_life_s,source_exp,source_qed\n"
              "\n"
              "muon,2.00233184182,,1e-06,codata-2010,\n"));
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].name == "muon");
    CHECK(!ok[0].g_qed.has_value());
}
