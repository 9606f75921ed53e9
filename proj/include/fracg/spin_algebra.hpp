#ifndef FRACG_SPIN_ALGEBRA_HPP
#define FRACG_SPIN_ALGEBRA_HPP

#include <array>

#include "fracg/matrix.hpp"
#include "fracg/mrl.hpp"

namespace fracg {

/// Pauli matrices sigma_1..sigma_3 (sigma_0 = identity).
const Mat2& pauli(int i);

/// Scale constants of the fractional angular-momentum algebra. hbar_eff is
/// derived on construction and never cached stale:
///   hbar_eff = Gamma(alpha+1) hbar^alpha M_alpha.
/// M_alpha is the dimensional scale constant; it defaults to 1 in natural
/// units and covers the spatial/temporal variants as one configurable value.
struct EffectiveConstants {
    double hbar;
    FractionalOrder alpha;
    double m_alpha;
    double hbar_eff;

    static EffectiveConstants make(double hbar, FractionalOrder alpha, double m_alpha = 1.0);
};

/// hbar_eff = Gamma(alpha+1) hbar^alpha M_alpha. Throws DomainError for
/// non-positive hbar or M_alpha, overflow_error if the result is not finite.
double effective_planck(double hbar, FractionalOrder alpha, double m_alpha);

/// Spin-1/2 generators L_i = (hbar_eff/2) sigma_i.
struct FractionalAngularMomentum {
    EffectiveConstants constants;
    Mat2 lx, ly, lz;

    Mat2 l_plus() const { return lx + cplx(0.0, 1.0) * ly; }
    Mat2 l_minus() const { return lx - cplx(0.0, 1.0) * ly; }
    Mat2 l_squared() const { return lx * lx + ly * ly + lz * lz; }
};

FractionalAngularMomentum build_spin_half(const EffectiveConstants& constants);

struct CommutatorReport {
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Entry-wise residual of the rescaled su(2) relations:
///   [L_i, L_j] = i hbar_eff eps_ijk L_k,
///   [L_+, L_-] = 2 hbar_eff L_z,  [L_z, L_+-] = +- hbar_eff L_+-,
///   [L^2, L_i] = [L^2, L_+-] = 0.
CommutatorReport verify_commutators(const FractionalAngularMomentum& am, double tol);

/// S . p_hat for a unit direction; Hermitian with eigenvalues +-hbar_eff/2.
/// Throws DomainError when |p_hat| deviates from 1 by more than 1e-12.
Mat2 helicity_projection(const FractionalAngularMomentum& am,
                         const std::array<double, 3>& p_hat);

/// Eigenvalue divided by hbar_eff/2, i.e. the +-1 helicity convention.
double normalized_helicity(const FractionalAngularMomentum& am, double eigenvalue);

}  // namespace fracg

#endif
