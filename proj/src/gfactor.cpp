#include "fracg/gfactor.hpp"

#include <algorithm>
#include <cmath>

#include "fracg/errors.hpp"
#include "fracg/special_functions.hpp"

namespace fracg {

double g_frac(FractionalOrder alpha) {
    const double G = gamma(alpha.value() + 1.0);
    return 4.0 / ((1.0 + G) * G);
}

double g_frac_derivative(FractionalOrder alpha) {
    const double a = alpha.value();
    const double G = gamma(a + 1.0);
    const double psi = digamma(a + 1.0);
    return -4.0 * psi * (1.0 + 2.0 * G) / ((1.0 + G) * (1.0 + G) * G);
}

GFactorSolution invert_g(double g_target, const InvertOptions& opts) {
    if (!std::isfinite(g_target)) throw DomainError("g target must be finite");
    if (!(opts.bracket_lo < opts.bracket_hi))
        throw DomainError("invalid bracket");

    auto f = [&](double a) { return g_frac(FractionalOrder(a)) - g_target; };

    double lo = opts.bracket_lo;
    double hi = opts.bracket_hi;
    double flo = f(lo);
    double fhi = f(hi);

    GFactorSolution sol;
    sol.g_input = g_target;

    if (std::abs(flo) <= opts.tol) {
        sol.alpha = lo;
        sol.residual = std::abs(flo);
        sol.method = GFactorSolution::Method::bisection;
        return sol;
    }
    if (std::abs(fhi) <= opts.tol) {
        sol.alpha = hi;
        sol.residual = std::abs(fhi);
        sol.method = GFactorSolution::Method::bisection;
        return sol;
    }
    if (flo * fhi > 0.0)
        throw BracketError("g_frac does not straddle the target over the bracket");

    // g_frac is decreasing: f(lo) > 0 > f(hi) on physical brackets, but keep
    // the sign bookkeeping general.
    double x = lo, fx = flo;
    bool used_newton = false;
    int iter = 0;

    auto shrink = [&](double xm, double fm) {
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = xm;
            flo = fm;
        } else {
            hi = xm;
            fhi = fm;
        }
    };

    while (iter < opts.max_iter) {
        ++iter;
        if (hi - lo >= 1e-3) {
            x = 0.5 * (lo + hi);
            fx = f(x);
        } else {
            // Newton refinement once the bracket is tight
            const double d = g_frac_derivative(FractionalOrder(x));
            double xn = x - fx / d;
            if (!(xn > lo && xn < hi)) {
                xn = 0.5 * (lo + hi);
            } else {
                used_newton = true;
            }
            x = xn;
            fx = f(x);
        }
        if (std::abs(fx) <= opts.tol) break;
        shrink(x, fx);
        // Bracket collapsed to adjacent doubles: no representable point can
        // do better, return the best endpoint.
        if (std::nextafter(lo, hi) >= hi) {
            if (std::abs(flo) < std::abs(fx)) { x = lo; fx = flo; }
            if (std::abs(fhi) < std::abs(fx)) { x = hi; fx = fhi; }
            break;
        }
        if (iter == opts.max_iter)
            throw MaxIterError("invert_g did not converge in max_iter iterations");
    }

    sol.alpha = x;
    sol.residual = std::abs(fx);
    sol.iterations = iter;
    sol.method = used_newton ? GFactorSolution::Method::hybrid
                             : GFactorSolution::Method::bisection;
    return sol;
}

HierarchyReport hierarchy_report(const std::vector<LeptonRecord>& records,
                                 const InvertOptions& opts) {
    if (records.empty()) throw DomainError("hierarchy_report needs records");

    HierarchyReport rep;
    auto add_row = [&](const std::string& name, const std::string& source, double g) {
        ReportRow row;
        row.lepton = name;
        row.source = source;
        row.g = g;
        try {
            const GFactorSolution s = invert_g(g, opts);
            row.alpha = s.alpha;
            row.residual = s.residual;
            row.iterations = s.iterations;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
        rep.rows.push_back(std::move(row));
    };

    for (const auto& r : records) {
        validate(r);
        if (r.g_exp) add_row(r.name, "exp", *r.g_exp);
        if (r.g_qed) add_row(r.name, "qed", *r.g_qed);
    }

    std::stable_sort(rep.rows.begin(), rep.rows.end(),
                     [](const ReportRow& a, const ReportRow& b) {
                         if (a.ok != b.ok) return a.ok;  // failures last
                         return a.alpha > b.alpha;
                     });

    // hierarchy over the preferred (experimental-first) value per lepton
    auto preferred_alpha = [&](const std::string& name) -> std::optional<double> {
        for (const auto& r : records) {
            if (r.name != name) continue;
            const auto g = r.g_exp ? r.g_exp : r.g_qed;
            if (!g) continue;
            const std::string src = r.g_exp ? "exp" : "qed";
            for (const auto& row : rep.rows)
                if (row.ok && row.lepton == name && row.source == src) return row.alpha;
        }
        return std::nullopt;
    };
    const auto ae = preferred_alpha("electron");
    const auto am = preferred_alpha("muon");
    const auto at = preferred_alpha("tau");
    rep.hierarchy_holds = ae && am && at && *ae > *am && *am > *at;

    for (const auto& r : records) {
        if (!r.g_exp || !r.g_qed) continue;
        double a_exp = 0.0, a_qed = 0.0;
        bool have_exp = false, have_qed = false;
        for (const auto& row : rep.rows) {
            if (!row.ok || row.lepton != r.name) continue;
            if (row.source == "exp") { a_exp = row.alpha; have_exp = true; }
            if (row.source == "qed") { a_qed = row.alpha; have_qed = true; }
        }
        if (have_exp && have_qed)
            rep.comparisons.push_back({r.name, a_exp, a_qed, a_qed < a_exp});
    }
    return rep;
}

}  // namespace fracg
