#ifndef FRACG_DIRAC_HPP
#define FRACG_DIRAC_HPP

#include <array>
#include <complex>

#include "fracg/matrix.hpp"
#include "fracg/mrl.hpp"

namespace fracg {

/// Inputs of the fractional dispersion relation E^2a = p^2a c^2a + m^2a c^4a.
struct DispersionInput {
    double p = 0.0;
    double m = 0.0;
    double c = 1.0;
    FractionalOrder alpha{1.0};
};

/// E = (p^2a c^2a + m^2a c^4a)^(1/2a). p = m = 0 returns exactly 0;
/// DomainError is reserved for negative p or m, or c <= 0.
double dispersion_energy(const DispersionInput& in);

/// sigma^mu = (I, sigma_i) and sigma_bar^mu = (I, -sigma_i).
const Mat2& sigma_mu(int mu);
const Mat2& sigma_bar_mu(int mu);

/// Metric eta^{mu nu}, signature (+,-,-,-).
double metric(int mu, int nu);

/// Chiral-basis gamma matrices stacked from the two Weyl blocks:
///   gamma^mu = [[0, sigma_bar^mu], [sigma^mu, 0]]
/// acting on Psi = (chi_L; xi_R); gamma^0 off-diagonal blocks are the
/// identity. Satisfies {gamma^mu, gamma^nu} = 2 eta^{mu nu} 1.
struct GammaBasis {
    std::array<Mat4, 4> gamma;
};

GammaBasis build_gamma_basis();

/// Sigma^{mu nu} = (1/2)[gamma^mu, gamma^nu]; sigma^{mu nu} = i Sigma^{mu nu}.
Mat4 sigma_munu(const GammaBasis& basis, int mu, int nu);

/// Plane wave e^{-i k.x} in the coarse-grained phase convention: the
/// fractional derivative acts as multiplication,
///   d^a_mu Psi = -i Gamma(alpha+1) k_mu Psi
/// (and +i Gamma(alpha+1) k_mu on the conjugate). k holds contravariant
/// components (k^0, k^1, k^2, k^3).
struct FracPlaneWave {
    std::array<double, 4> k{};
    Vec4 spinor{};
    FractionalOrder alpha{1.0};
};

enum class Chirality { left, right };

/// 2-spinor with sigma.k_hat eigenvalue lambda (+1 or -1). lambda = +1 is
/// the left-helicity solution annihilated by sigma^mu k_mu.
Vec2 helicity_spinor(const std::array<double, 3>& k_hat, int lambda);

/// Massless plane wave (k_0 = |k|) carrying the lambda-helicity 2-spinor in
/// the matching chiral block of the 4-spinor.
FracPlaneWave massless_wave(const std::array<double, 3>& k_vec, int lambda,
                            FractionalOrder alpha);

/// Norm of hbar^a Gamma(a+1) (sigma^mu k_mu) chi_L (left) or the sigma_bar
/// contraction on xi_R (right). Zero for the correctly built helicity
/// eigen-spinor. Throws OffShellError if |k_0 - |k|| > 1e-12.
double weyl_residual(const FracPlaneWave& wave, Chirality chirality, double hbar = 1.0);

/// Mass-shell wave vector for the plane-wave Dirac kernel: the operator
/// hbar^a Gamma(a+1) gamma^mu k_mu - m^a c^a has a nontrivial kernel only
/// when (hbar^a Gamma(a+1))^2 k.k = m^2a c^2a, so
///   k_0 = sqrt(|k|^2 + (m^a c^a / (hbar^a Gamma(a+1)))^2).
/// This Gamma-corrected shell is this module's "on-shell" for massive
/// waves; it deviates from the bare dispersion relation for alpha != 1 and
/// the two are deliberately kept independent.
std::array<double, 4> on_shell_wavevector(const std::array<double, 3>& k_vec, double m,
                                          double c, double hbar, FractionalOrder alpha);

/// Positive-energy solution u = (sqrt(kappa.sigma_bar) xi ; sqrt(kappa.sigma) xi)
/// with kappa = hbar^a Gamma(a+1) k, for a 2-spinor xi.
FracPlaneWave dirac_wave(const std::array<double, 4>& k, const Vec2& xi, double m,
                         double c, double hbar, FractionalOrder alpha);

/// |(hbar^a Gamma(a+1) gamma^mu k_mu - m^a c^a 1) spinor|. Throws
/// OffShellError when k violates the Gamma-corrected shell.
double dirac_residual(const FracPlaneWave& wave, double m, double c = 1.0,
                      double hbar = 1.0);

struct GaugePhaseResult {
    double residual = 0.0;          // |LHS - RHS|
    std::complex<double> lhs{};     // dR/dchi (finite difference) * D^a chi
    std::complex<double> rhs{};     // -i e_a/(c^a hbar^a) R * D^a chi
    double dalpha_chi = 0.0;        // D^a chi from the integral-form evaluator
};

/// Checks d^a R = -(i e_a/(c^a hbar^a)) R d^a chi for the gauge phase
/// R = exp(-(i e_a/(c^a hbar^a)) chi) under the coarse-grained chain rule:
/// d^a R is formed as (dR/dchi) D^a chi with dR/dchi taken by 4th-order
/// finite difference in chi and D^a chi from mrl_derivative_rl (shared by
/// both sides), so the residual is the chain-rule self-consistency at
/// quadrature accuracy.
GaugePhaseResult gauge_phase_check(const SampledFunction& chi, double e_alpha, double c,
                                   double hbar, FractionalOrder alpha, double x,
                                   int nodes = kDefaultRlNodes);

/// Coefficients of the non-relativistic (Pauli) reduction.
struct PauliReduction {
    double alpha = 1.0;
    double kinetic_denominator = 0.0;  // (1 + Gamma(a+1)) m^a
    double rest_shift = 0.0;           // (1 - Gamma(a+1)) m^a c^2a
    double spin_coupling = 0.0;        // S.B coefficient / (-e_a/(2 m^a c^a))
    double g_factor = 0.0;             // 4 / ((1 + Gamma(a+1)) Gamma(a+1))
};

/// m > 0 required. At alpha = 1: rest_shift = 0, kinetic = 2m, g = 2.
PauliReduction pauli_reduction(FractionalOrder alpha, double m, double c);

/// Gordon split of the plane-wave current. All three are contravariant
/// 4-vectors; total = convective + spin when both waves solve the
/// plane-wave Dirac equation.
struct GordonCurrents {
    std::array<std::complex<double>, 4> total{};
    std::array<std::complex<double>, 4> convective{};
    std::array<std::complex<double>, 4> spin{};
};

/// total^mu      = Psi_out~ gamma^mu Psi_in            (Psi~ = Psi^dag gamma^0)
/// convective^mu = hbar^a G/(2 m^a c^a) (k_out+k_in)^mu Psi~Psi
/// spin^mu       = -hbar^a G/(2 m^a c^a) (k_out-k_in)_nu Psi~ Sigma^{mu nu} Psi
/// with G = Gamma(alpha+1). Throws OnShellError unless both waves satisfy
/// dirac_residual <= 1e-8 * scale.
GordonCurrents gordon_decompose(const FracPlaneWave& wave_out, const FracPlaneWave& wave_in,
                                double m, double c = 1.0, double hbar = 1.0);

}  // namespace fracg

#endif
