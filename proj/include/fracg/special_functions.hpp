#ifndef FRACG_SPECIAL_FUNCTIONS_HPP
#define FRACG_SPECIAL_FUNCTIONS_HPP

namespace fracg {

/// Gamma function for real arguments.
///
/// Lanczos rational approximation (N=13, g ~ 6.0247, the published
/// double-precision coefficient set) for x >= 0.5, reflection formula below.
/// Positive integers up to 22 take an exact factorial path.
/// Relative error <= a few ulp on [0.5, 10] (measured worst 1.3e-15).
///
/// Throws PoleError when x is a non-positive integer (absolute tolerance
/// 1e-300), DomainError on NaN/infinity.
double gamma(double x);

/// log(Gamma(x)) for x > 0. Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// Digamma (psi) function for real arguments.
///
/// Upward recurrence to x >= 16 plus the Bernoulli asymptotic series; a
/// dedicated Taylor expansion around the positive root x0 ~ 1.46163 keeps
/// the relative error small where psi crosses zero (measured worst 8.2e-15
/// on [1, 3]). Reflection for x < 0.5.
///
/// Throws PoleError at non-positive integers, DomainError on NaN/infinity.
double digamma(double x);

}  // namespace fracg

#endif
