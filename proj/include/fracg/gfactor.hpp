#ifndef FRACG_GFACTOR_HPP
#define FRACG_GFACTOR_HPP

#include <string>
#include <vector>

#include "fracg/leptons.hpp"
#include "fracg/mrl.hpp"

namespace fracg {

/// Fractional g-factor g_frac(alpha) = 4 / ((1 + Gamma(alpha+1)) Gamma(alpha+1)).
/// g_frac(1) = 2 exactly; strictly decreasing on (0.9, 1.0).
double g_frac(FractionalOrder alpha);

/// Analytic dg/dalpha = -4 psi(a+1) (1 + 2 G) / ((1 + G)^2 G), G = Gamma(a+1).
double g_frac_derivative(FractionalOrder alpha);

/// Result of inverting g_frac(alpha) = g.
struct GFactorSolution {
    enum class Method { bisection, newton, hybrid };

    double alpha = 0.0;
    double g_input = 0.0;
    double residual = 0.0;  // |g_frac(alpha) - g_input|
    int iterations = 0;
    Method method = Method::hybrid;
};

struct InvertOptions {
    double bracket_lo = 0.9;
    double bracket_hi = 1.0;
    double tol = 1e-15;    // on |g_frac(alpha) - g_target|
    int max_iter = 200;
};

/// Hybrid root finder: bisection until the bracket is narrower than 1e-3,
/// then Newton steps with g_frac_derivative, falling back to bisection
/// whenever a Newton step leaves the bracket. Deterministic: identical
/// inputs give bit-identical solutions.
///
/// Throws BracketError when g_frac does not straddle g_target over the
/// bracket and MaxIterError after max_iter iterations. If the bracket
/// collapses to adjacent doubles before |residual| <= tol (tol below the
/// evaluation floor of g_frac, a few ulp of 2.0), the best point is
/// returned with its achieved residual.
GFactorSolution invert_g(double g_target, const InvertOptions& opts = {});

/// One line of the hierarchy table.
struct ReportRow {
    std::string lepton;
    std::string source;  // "exp" or "qed"
    double g = 0.0;
    double alpha = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool ok = true;
    std::string error;  // set when the solver failed for this row
};

struct QedExpComparison {
    std::string lepton;
    double alpha_exp = 0.0;
    double alpha_qed = 0.0;
    bool qed_below_exp = false;  // alpha_qed < alpha_exp
};

struct HierarchyReport {
    std::vector<ReportRow> rows;  // sorted by alpha descending, failures last
    bool hierarchy_holds = false; // alpha(electron) > alpha(muon) > alpha(tau)
    std::vector<QedExpComparison> comparisons;
};

/// Inverts every g value present in the records (one row per value; solver
/// failures flag the row instead of aborting). hierarchy_holds uses each
/// lepton's experimental g when present, otherwise its QED value.
HierarchyReport hierarchy_report(const std::vector<LeptonRecord>& records,
                                 const InvertOptions& opts = {});

}  // namespace fracg

#endif
