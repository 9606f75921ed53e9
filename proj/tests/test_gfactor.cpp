#include "fracg/gfactor.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "fracg/errors.hpp"
#include "fracg/golden.hpp"
#include "fracg/special_functions.hpp"

using namespace fracg;

TEST_CASE("g_frac values") {
    CHECK(g_frac(FractionalOrder(1.0)) == 2.0);
    // electron pair: g_frac at the published alpha reproduces the measured g
    CHECK(std::abs(g_frac(FractionalOrder(0.9981697906061296726)) - 2.00231930436146) <= 5e-12);
    // oracle value of g_frac(1/2)
    CHECK(std::abs(g_frac(FractionalOrder(0.5)) - 2.39288105130757489526) <= 1e-14);
    CHECK(std::abs(g_frac(FractionalOrder(0.9)) - 2.12003719799055393806) <= 1e-14);
}

TEST_CASE("g_frac derivative") {
    // negative throughout the physical window: g_frac is decreasing
    for (double a : {0.9, 0.95, 0.99, 1.0})
        CHECK(g_frac_derivative(FractionalOrder(a)) < 0.0);

    // matches the oracle at the endpoints of the check
    CHECK(std::abs(g_frac_derivative(FractionalOrder(0.95)) - (-1.20213858654289336139)) <=
          1e-12);
    CHECK(std::abs(g_frac_derivative(FractionalOrder(1.0)) - (-1.26835300529540141818)) <=
          1e-12);

    // central finite difference, h = 1e-6
    const double h = 1e-6;
    for (double a : {0.92, 0.95, 0.98}) {
        const double fd =
            (g_frac(FractionalOrder(a + h)) - g_frac(FractionalOrder(a - h))) / (2.0 * h);
        const double an = g_frac_derivative(FractionalOrder(a));
        CHECK(std::abs(an - fd) / std::abs(an) <= 1e-6);
    }
}

TEST_CASE("g_frac monotone decreasing on the physical window") {
    double prev = g_frac(FractionalOrder(0.9));
    for (int i = 1; i <= 10000; ++i) {
        const double g = g_frac(FractionalOrder(0.9 + 0.1 * i / 10000.0));
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("invert_g at the classical endpoint") {
    const GFactorSolution s = invert_g(2.0);
    CHECK(std::abs(s.alpha - 1.0) <= 1e-12);
    CHECK(s.method == GFactorSolution::Method::bisection);
}

TEST_CASE("invert_g reproduces the lepton table") {
    for (const auto& e : kGoldenSection) {
        const GFactorSolution s = invert_g(e.g);
        CHECK(std::abs(s.alpha - e.alpha) <= 1e-12);
        CHECK(s.residual <= 1e-15);
        CHECK(s.alpha > 0.9);
        CHECK(s.alpha < 1.0);
        CHECK(s.iterations < 200);
    }
}

TEST_CASE("invert_g errors") {
    CHECK_THROWS_AS(invert_g(1.0), BracketError);   // below the bracket range
    CHECK_THROWS_AS(invert_g(3.0), BracketError);   // above it
    CHECK_THROWS_AS(invert_g(std::nan("")), DomainError);
}

TEST_CASE("invert_g round trip") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.9 + 1e-9, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = u(rng);
        const GFactorSolution s = invert_g(g_frac(FractionalOrder(a)));
        CHECK(std::abs(s.alpha - a) <= 1e-12);
    }
}

TEST_CASE("invert_g is deterministic") {
    const GFactorSolution a = invert_g(2.00231930436146);
    const GFactorSolution b = invert_g(2.00231930436146);
    CHECK(a.alpha == b.alpha);
    CHECK(a.residual == b.residual);
    CHECK(a.iterations == b.iterations);
    CHECK(a.method == b.method);
}

TEST_CASE("hierarchy report over the embedded dataset") {
    const HierarchyReport rep = hierarchy_report(default_leptons());
    REQUIRE(rep.rows.size() == 5);
    CHECK(rep.hierarchy_holds);

    // sorted by alpha descending
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        CHECK(rep.rows[i - 1].alpha >= rep.rows[i].alpha);

    // every row solved
    for (const auto& r : rep.rows) {
        CHECK(r.ok);
        CHECK(r.residual <= 1e-15);
    }

    REQUIRE(rep.comparisons.size() == 2);
    for (const auto& c : rep.comparisons) {
        if (c.lepton == "electron") CHECK(c.qed_below_exp);   // alpha_QED < alpha_Exp
        if (c.lepton == "muon") CHECK(!c.qed_below_exp);      // alpha_QED > alpha_Exp
    }
}

TEST_CASE("hierarchy report flags unsolvable rows instead of aborting") {
    InvertOptions narrow;
    narrow.bracket_lo = 0.99;
    narrow.bracket_hi = 0.9901;  // none of the lepton alphas sit here
    const HierarchyReport rep = hierarchy_report(default_leptons(), narrow);
    REQUIRE(rep.rows.size() == 5);
    for (const auto& r : rep.rows) {
        CHECK(!r.ok);
        CHECK(!r.error.empty());
    }
    CHECK(!rep.hierarchy_holds);
}

TEST_CASE("hierarchy report rejects empty input") {
    CHECK_THROWS_AS(hierarchy_report({}), DomainError);
}
