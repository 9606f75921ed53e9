#include "fracg/verify.hpp"

#include <cmath>
#include <random>

#include "fracg/dirac.hpp"
#include "fracg/errors.hpp"
#include "fracg/gfactor.hpp"
#include "fracg/golden.hpp"
#include "fracg/mrl.hpp"
#include "fracg/special_functions.hpp"
#include "fracg/spin_algebra.hpp"

namespace fracg {

namespace {

SampledFunction power_fn(double g) {
    return SampledFunction{[g](double t) { return std::pow(t, g); }};
}

std::vector<double> alpha_grid(const VerifyConfig& cfg, std::vector<double> def) {
    if (cfg.alpha_restrict) return {*cfg.alpha_restrict};
    return def;
}

// sin(pi x) for x in (0, 1), evaluated at min(x, 1-x) so the pi-rounding
// error is not amplified near the right endpoint.
double sin_pi(double x) {
    return std::sin(M_PI * std::min(x, 1.0 - x));
}

std::array<double, 3> random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        const double x = u(rng), y = u(rng), z = u(rng);
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n > 0.1 && n <= 1.0) return {x / n, y / n, z / n};
    }
}

Vec2 random_spinor(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec2 v;
    for (auto& c : v) {
        const double re = n(rng);
        const double im = n(rng);
        c = cplx(re, im);
    }
    const double s = norm(v);
    for (auto& c : v) c /= s;
    return v;
}

struct SuiteRunner {
    std::vector<SuiteResult> results;

    void add(const std::string& name, double residual, double tol, bool strict = false) {
        const bool pass = strict ? residual < tol : residual <= tol;
        results.push_back({name, residual, tol, pass});
    }
};

void specialfn_suites(SuiteRunner& out, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u1(0.5, 20.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = u1(rng);
        worst = std::max(worst,
                         std::abs(gamma(x + 1.0) - x * gamma(x)) / std::abs(gamma(x + 1.0)));
    }
    out.add("gamma-recurrence", worst, 1e-13);

    std::uniform_real_distribution<double> u2(1e-6, 1.0 - 1e-6);
    worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = u2(rng);
        worst = std::max(worst,
                         std::abs(gamma(x) * gamma(1.0 - x) * sin_pi(x) / M_PI - 1.0));
    }
    out.add("gamma-reflection", worst, 1e-12);

    std::uniform_real_distribution<double> u3(1.0, 3.0);
    worst = 0.0;
    const double h = 1e-6;
    for (int i = 0; i < 500; ++i) {
        const double x = u3(rng);
        const double fd = (log_gamma(x + h) - log_gamma(x - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - digamma(x)));
    }
    out.add("digamma-finite-difference", worst, 1e-7);
}

void mrl_suites(SuiteRunner& out, const VerifyConfig& cfg) {
    const auto alphas = alpha_grid(cfg, {0.2, 0.5, 0.8});
    const double gammas[] = {0.5, 1.0, 1.5, 2.0};
    const double xs[] = {0.25, 0.5, 1.0};

    double worst_closed = 0.0, worst_cross = 0.0;
    for (double g : gammas)
        for (double a : alphas)
            for (double x : xs) {
                const auto f = power_fn(g);
                const FracDerivResult r = frac_derivative(f, FractionalOrder(a), x);
                const double cf = power_rule(g, FractionalOrder(a), x);
                worst_closed = std::max(worst_closed, std::abs(r.rl_value - cf) / std::abs(cf));
                worst_cross =
                    std::max(worst_cross, std::abs(r.gl_value - r.rl_value) / std::abs(r.rl_value));
            }
    out.add("mrl-closed-form", worst_closed, 1e-5);
    out.add("mrl-cross-validation", worst_cross, 1e-4);

    double worst_const = 0.0;
    for (double k : {7.0, -3.0})
        for (double a : alphas)
            for (double x : xs) {
                SampledFunction f{[k](double) { return k; }};
                const FracDerivResult r = frac_derivative(f, FractionalOrder(a), x);
                worst_const = std::max({worst_const, std::abs(r.gl_value), std::abs(r.rl_value)});
            }
    out.add("mrl-constant-annihilation", worst_const, 1e-10);

    double worst_lin = 0.0;
    for (double a : alphas)
        for (double x : {0.5, 1.0}) {
            const auto f = power_fn(1.5);
            const auto g = power_fn(0.5);
            SampledFunction combo{[&](double t) { return 2.0 * f.eval(t) + 3.0 * g.eval(t); }};
            const FracDerivResult rc = frac_derivative(combo, FractionalOrder(a), x);
            const FracDerivResult rf = frac_derivative(f, FractionalOrder(a), x);
            const FracDerivResult rg = frac_derivative(g, FractionalOrder(a), x);
            const double want_rl = 2.0 * rf.rl_value + 3.0 * rg.rl_value;
            const double want_gl = 2.0 * rf.gl_value + 3.0 * rg.gl_value;
            worst_lin = std::max(worst_lin, std::abs(rc.rl_value - want_rl) / std::abs(want_rl));
            worst_lin = std::max(worst_lin, std::abs(rc.gl_value - want_gl) / std::abs(want_gl));
        }
    out.add("mrl-linearity", worst_lin, 1e-10);

    if (!cfg.alpha_restrict) {
        // |D^a f - f'| must shrink monotonically as alpha -> 1
        const auto f = power_fn(2.0);
        double prev = std::numeric_limits<double>::infinity();
        double worst_gap = -std::numeric_limits<double>::infinity();
        for (double a : {0.9, 0.99, 0.999}) {
            const double d = std::abs(mrl_derivative_gl(f, FractionalOrder(a), 1.0) - 2.0);
            worst_gap = std::max(worst_gap, d - prev);
            prev = d;
        }
        out.add("mrl-classical-limit", worst_gap, 0.0, /*strict=*/true);
    }
}

void spin_suites(SuiteRunner& out, const VerifyConfig& cfg, std::mt19937_64& rng) {
    const auto alphas =
        alpha_grid(cfg, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});

    double worst_comm = 0.0, worst_ladder = 0.0, worst_hel = 0.0;
    for (double a : alphas) {
        const auto am = build_spin_half(EffectiveConstants::make(1.0, FractionalOrder(a)));
        const double h = am.constants.hbar_eff;
        worst_comm = std::max(worst_comm, verify_commutators(am, 1e-14).max_residual);

        // (L)^2 = (3/4) hbar_eff^2 I
        Mat2 l2 = am.l_squared();
        l2 -= (0.75 * h * h) * Mat2::identity();
        worst_comm = std::max(worst_comm, l2.max_abs());

        // L_+ |down> = hbar_eff |up>
        const Vec2 down{0.0, 1.0}, up{1.0, 0.0};
        Vec2 raised = am.l_plus() * down;
        raised[0] -= h * up[0];
        raised[1] -= h * up[1];
        worst_ladder = std::max(worst_ladder, norm(raised));

        for (int i = 0; i < 100; ++i) {
            const auto dir = random_unit(rng);
            const auto eig = hermitian_eigenvalues(helicity_projection(am, dir));
            worst_hel = std::max({worst_hel, std::abs(eig[0] + 0.5 * h),
                                  std::abs(eig[1] - 0.5 * h)});
            worst_hel = std::max({worst_hel,
                                  std::abs(normalized_helicity(am, eig[1]) - 1.0),
                                  std::abs(normalized_helicity(am, eig[0]) + 1.0)});
        }
    }
    out.add("spin-algebra", worst_comm, 1e-14);
    out.add("spin-ladder", worst_ladder, 1e-13);
    out.add("helicity-eigenvalues", worst_hel, 1e-12);
}

void gamma_basis_suites(SuiteRunner& out, std::mt19937_64& rng) {
    const GammaBasis b = build_gamma_basis();
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            Mat4 ac = anticommutator(b.gamma[mu], b.gamma[nu]);
            ac -= (2.0 * metric(mu, nu)) * Mat4::identity();
            worst = std::max(worst, ac.max_abs());
            worst = std::max(worst, std::abs((sigma_mu(mu) * sigma_bar_mu(nu)).trace() -
                                             2.0 * metric(mu, nu)));
            Mat4 antisym = sigma_munu(b, mu, nu) + sigma_munu(b, nu, mu);
            worst = std::max(worst, antisym.max_abs());
        }
    out.add("gamma-basis-identities", worst, 1e-15);

    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst_pauli = 0.0;
    for (int i = 0; i < 20; ++i) {
        const std::array<double, 3> a{u(rng), u(rng), u(rng)};
        const std::array<double, 3> c{u(rng), u(rng), u(rng)};
        Mat2 sa, sc;
        for (int j = 0; j < 3; ++j) {
            sa += a[j] * pauli(j + 1);
            sc += c[j] * pauli(j + 1);
        }
        const double dot = a[0] * c[0] + a[1] * c[1] + a[2] * c[2];
        const std::array<double, 3> cross{a[1] * c[2] - a[2] * c[1],
                                          a[2] * c[0] - a[0] * c[2],
                                          a[0] * c[1] - a[1] * c[0]};
        Mat2 want = dot * Mat2::identity();
        for (int j = 0; j < 3; ++j) want += cplx(0.0, cross[j]) * pauli(j + 1);
        Mat2 diff = sa * sc - want;
        worst_pauli = std::max(worst_pauli, diff.max_abs());
    }
    out.add("pauli-product-identity", worst_pauli, 1e-15);
}

void weyl_suite(SuiteRunner& out, const VerifyConfig& cfg, std::mt19937_64& rng) {
    const auto alphas = alpha_grid(cfg, {0.3, 0.5, 0.8, 1.0});
    double worst = 0.0;
    std::uniform_real_distribution<double> mag(0.2, 2.0);
    for (double a : alphas) {
        const double G = gamma(a + 1.0);
        for (int i = 0; i < 20; ++i) {
            const auto dir = random_unit(rng);
            const double k = mag(rng);
            const std::array<double, 3> kv{k * dir[0], k * dir[1], k * dir[2]};
            const auto left = massless_wave(kv, +1, FractionalOrder(a));
            const auto right = massless_wave(kv, -1, FractionalOrder(a));
            worst = std::max(worst, weyl_residual(left, Chirality::left));
            worst = std::max(worst, weyl_residual(right, Chirality::right));
            // feeding the opposite block is maximally violating: 2 G |k|
            FracPlaneWave wrong = left;
            std::swap(wrong.spinor[0], wrong.spinor[2]);
            std::swap(wrong.spinor[1], wrong.spinor[3]);
            const double r = weyl_residual(wrong, Chirality::right);
            worst = std::max(worst, std::abs(r - 2.0 * G * k));
        }
    }
    out.add("weyl-equations", worst, 1e-12);
}

void dispersion_suite(SuiteRunner& out, const VerifyConfig& cfg) {
    const auto alphas = alpha_grid(cfg, {0.2, 0.5, 0.8, 1.0});
    double worst_gap = -std::numeric_limits<double>::infinity();
    for (double a : alphas)
        for (double m : {0.0, 1.0}) {
            double prev = -std::numeric_limits<double>::infinity();
            for (int i = 0; i <= 50; ++i) {
                const double p = 0.05 + 0.1 * i;
                const double e = dispersion_energy({p, m, 1.0, FractionalOrder(a)});
                if (i > 0) worst_gap = std::max(worst_gap, prev - e);
                prev = e;
            }
        }
    out.add("dispersion-monotonic", worst_gap, 0.0, /*strict=*/true);
}

void gordon_suites(SuiteRunner& out, const VerifyConfig& cfg, std::mt19937_64& rng) {
    const auto alphas = alpha_grid(cfg, {0.3, 0.5, 0.8, 1.0});
    const double m = 1.3, c = 1.0, hbar = 1.0;
    std::normal_distribution<double> kdist(0.0, 0.6);

    double worst_closure = 0.0, worst_cont = 0.0;
    for (double a : alphas) {
        const FractionalOrder alpha(a);
        for (int i = 0; i < 50; ++i) {
            std::array<double, 3> kv_in{kdist(rng), kdist(rng), kdist(rng)};
            std::array<double, 3> kv_out{kdist(rng), kdist(rng), kdist(rng)};
            const auto k_in = on_shell_wavevector(kv_in, m, c, hbar, alpha);
            const auto k_out = on_shell_wavevector(kv_out, m, c, hbar, alpha);
            const auto w_in = dirac_wave(k_in, random_spinor(rng), m, c, hbar, alpha);
            const auto w_out = dirac_wave(k_out, random_spinor(rng), m, c, hbar, alpha);
            const GordonCurrents j = gordon_decompose(w_out, w_in, m, c, hbar);
            cplx cont = 0.0;
            for (int mu = 0; mu < 4; ++mu) {
                const cplx gap = j.total[mu] - j.convective[mu] - j.spin[mu];
                worst_closure = std::max(worst_closure, std::abs(gap));
                const double dk_low =
                    (mu == 0 ? 1.0 : -1.0) * (k_out[mu] - k_in[mu]);
                cont += dk_low * j.total[mu];
            }
            worst_cont = std::max(worst_cont, std::abs(cont));
        }
    }
    out.add("gordon-closure", worst_closure, 1e-10);
    out.add("current-continuity", worst_cont, 1e-10);
}

void gauge_suites(SuiteRunner& out, const VerifyConfig& cfg) {
    auto alphas = alpha_grid(cfg, {0.3, 0.5, 0.8});
    double worst_res = 0.0, worst_quad = 0.0;
    bool ran = false;
    for (double a : alphas) {
        if (a == 1.0) continue;  // integral-form evaluator excludes alpha = 1
        ran = true;
        SampledFunction chi{[a](double t) { return std::pow(t, a); }};
        for (double x : {0.5, 1.0}) {
            const auto r = gauge_phase_check(chi, 1.0, 1.0, 1.0, FractionalOrder(a), x);
            worst_res = std::max(worst_res, r.residual);
            worst_quad = std::max(worst_quad, std::abs(r.dalpha_chi - gamma(a + 1.0)));
        }
    }
    if (!ran) return;
    out.add("gauge-phase", worst_res, 1e-6);
    out.add("gauge-quadrature", worst_quad, 1e-5);
}

void gfactor_suites(SuiteRunner& out, const VerifyConfig& cfg, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ua(0.9 + 1e-9, 1.0);
    double worst_rt = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a = ua(rng);
        const double g = g_frac(FractionalOrder(a));
        worst_rt = std::max(worst_rt, std::abs(invert_g(g).alpha - a));
    }
    out.add("gfactor-roundtrip", worst_rt, 1e-12);

    double worst_inc = -std::numeric_limits<double>::infinity();
    double prev = g_frac(FractionalOrder(0.9));
    for (int i = 1; i <= 10000; ++i) {
        const double a = 0.9 + 0.1 * i / 10000.0;
        const double g = g_frac(FractionalOrder(a));
        worst_inc = std::max(worst_inc, g - prev);
        prev = g;
    }
    out.add("gfactor-monotonic", worst_inc, 0.0, /*strict=*/true);

    double det = 0.0;
    for (const auto& e : kGoldenSection) {
        const GFactorSolution s1 = invert_g(e.g);
        const GFactorSolution s2 = invert_g(e.g);
        if (s1.alpha != s2.alpha || s1.residual != s2.residual ||
            s1.iterations != s2.iterations)
            det = 1.0;
    }
    out.add("gfactor-determinism", det, 0.0);

    const HierarchyReport rep = hierarchy_report(cfg.dataset);
    double worst_golden = 0.0;
    for (const auto& e : kGoldenSection) {
        bool found = false;
        for (const auto& row : rep.rows) {
            if (!row.ok || row.lepton != e.lepton || row.source != e.source) continue;
            found = true;
            worst_golden = std::max(worst_golden, std::abs(row.alpha - e.alpha));
        }
        if (!found) worst_golden = std::numeric_limits<double>::infinity();
    }
    out.add("gfactor-golden-table", worst_golden, kGoldenAlphaTol);

    double order = 0.0;
    if (!rep.hierarchy_holds) order = 1.0;
    bool saw_e = false, saw_mu = false;
    for (const auto& cmpr : rep.comparisons) {
        if (cmpr.lepton == "electron") {
            saw_e = true;
            if (!cmpr.qed_below_exp) order = 1.0;  // alpha_e-QED < alpha_e-Exp
        }
        if (cmpr.lepton == "muon") {
            saw_mu = true;
            if (cmpr.qed_below_exp) order = 1.0;  // alpha_mu-QED > alpha_mu-Exp
        }
    }
    if (!saw_e || !saw_mu) order = 1.0;
    out.add("gfactor-orderings", order, 0.0);
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyConfig& config) {
    SuiteRunner out;
    std::mt19937_64 rng(config.seed);
    specialfn_suites(out, rng);
    mrl_suites(out, config);
    spin_suites(out, config, rng);
    gamma_basis_suites(out, rng);
    weyl_suite(out, config, rng);
    dispersion_suite(out, config);
    gordon_suites(out, config, rng);
    gauge_suites(out, config);
    gfactor_suites(out, config, rng);
    return out.results;
}

}  // namespace fracg
