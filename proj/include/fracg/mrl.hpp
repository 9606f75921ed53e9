#ifndef FRACG_MRL_HPP
#define FRACG_MRL_HPP

#include <functional>
#include <limits>

namespace fracg {

/// Order of a modified Riemann-Liouville (Jumarie) derivative.
/// Valid range (0, 1]; alpha = 1 is the classical limit.
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha);
    double value() const noexcept { return alpha_; }
    bool is_classical() const noexcept { return alpha_ == 1.0; }

private:
    double alpha_;
};

/// A real function on [0, x_max] given by an evaluator. f(0) must be finite.
struct SampledFunction {
    std::function<double(double)> eval;
    double x_max = std::numeric_limits<double>::infinity();

    double operator()(double t) const { return eval(t); }
};

/// Both evaluations of one MRL derivative. `value` is the integral-form
/// (rl) result; `error_estimate` is |gl - rl| exactly.
struct FracDerivResult {
    double value = 0.0;
    double gl_value = 0.0;
    double rl_value = 0.0;
    double error_estimate = 0.0;
    int grid_size = 0;
};

enum class RuleId { leibniz, chain_nondiff, chain_coarse };

/// Measured violation of one of the approximate MRL product/chain rules.
struct RuleResidual {
    double pointwise_residual = 0.0;
    double relative_residual = 0.0;
    RuleId rule_id = RuleId::leibniz;
};

/// Diagnostics for the limit-sum evaluator.
struct GlInfo {
    long terms_used = 0;
    bool tail_converged = true;  // false = ConvergenceWarning
};

// Documented defaults for the two evaluators. Measured over the power-law
// sweep gamma in {0.5,1,1.5,2}, alpha in {0.2,0.5,0.8}, x in {0.25,0.5,1}:
// RL worst 3.7e-6 rel vs the closed form at 16384 nodes, GL worst 2.4e-5 rel
// at h = 5e-5 x (GL error is first order in h; 1e-3 x would give 4.8e-4 and
// miss the 1e-4 GL/RL agreement target).
inline constexpr int kDefaultRlNodes = 16384;
inline constexpr double kDefaultGlStepFactor = 5e-5;
inline constexpr long kMaxGlTerms = 100000;

/// Limit-sum (Grunwald-type) form of the MRL derivative:
///   h^-alpha sum_k (-1)^k C(alpha,k) (f(x+(alpha-k)h) - f(0)),
/// with f - f(0) extended by zero below t = 0, which truncates the sum at
/// k = floor(x/h + alpha). h = 0 selects the default 5e-5*x; terms = 0
/// selects all in-domain terms (capped at kMaxGlTerms).
///
/// Throws DomainError if any retained node leaves [0, x_max] (the domain
/// must cover [0, x + alpha h]). A user-supplied `terms` that stops before
/// the in-domain end with |C(alpha,terms)| > 1e-16 sets
/// info->tail_converged = false.
double mrl_derivative_gl(const SampledFunction& f, FractionalOrder alpha, double x,
                         double h = 0.0, long terms = 0, GlInfo* info = nullptr);

/// Integral form of the MRL derivative,
///   1/Gamma(1-alpha) d/dx int_0^x (x-t)^-alpha (f(t)-f(0)) dt,
/// by product integration on a uniform grid: the kernel moments against the
/// piecewise-linear interpolant of f are integrated analytically and the
/// outer d/dx is applied to those closed-form moments (never by numeric
/// differencing), which reduces to
///   dt^-alpha / Gamma(2-alpha) sum_j b_{n-1-j} (f_{j+1}-f_j),
///   b_i = (i+1)^(1-alpha) - i^(1-alpha).
/// Exact for piecewise-linear f; first-order or better in 1/nodes.
///
/// Throws DomainError for x outside (0, x_max] or nodes < 8, and
/// SingularityError for alpha = 1 (kernel exponent -1; use the classical
/// path in frac_derivative instead).
double mrl_derivative_rl(const SampledFunction& f, FractionalOrder alpha, double x,
                         int nodes = kDefaultRlNodes);

/// Closed-form power rule: Gamma(g+1)/Gamma(g+1-alpha) x^(g-alpha), g > 0.
double power_rule(double gamma_exp, FractionalOrder alpha, double x);

/// 4th-order central difference f'(x); the classical route used at alpha=1.
double central_derivative(const SampledFunction& f, double x);

/// Runs both evaluators and packages them. At alpha = 1 the rl slot is the
/// 4th-order central difference (grid_size = 5).
FracDerivResult frac_derivative(const SampledFunction& f, FractionalOrder alpha, double x,
                                int nodes = kDefaultRlNodes, double gl_step = 0.0);

/// |LHS - RHS| of the named approximate rule at x, all fractional
/// derivatives taken with mrl_derivative_rl. For chain rules f is the outer
/// function (of u) and g the inner map. This measures the rule; nothing
/// asserts the residual is zero.
RuleResidual rule_residual(RuleId id, const SampledFunction& f, const SampledFunction& g,
                           FractionalOrder alpha, double x, int nodes = kDefaultRlNodes);

}  // namespace fracg

#endif
