#include "fracg/spin_algebra.hpp"

#include <cmath>

#include "fracg/errors.hpp"
#include "fracg/special_functions.hpp"

namespace fracg {

namespace {

std::array<Mat2, 3> make_pauli() {
    std::array<Mat2, 3> s;
    s[0](0, 1) = 1.0;
    s[0](1, 0) = 1.0;
    s[1](0, 1) = cplx(0.0, -1.0);
    s[1](1, 0) = cplx(0.0, 1.0);
    s[2](0, 0) = 1.0;
    s[2](1, 1) = -1.0;
    return s;
}

}  // namespace

const Mat2& pauli(int i) {
    static const std::array<Mat2, 3> table = make_pauli();
    if (i < 1 || i > 3) throw DomainError("pauli index must be 1..3");
    return table[i - 1];
}

double effective_planck(double hbar, FractionalOrder alpha, double m_alpha) {
    if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
    if (!(m_alpha > 0.0)) throw DomainError("scale constant must be positive");
    const double v = gamma(alpha.value() + 1.0) * std::pow(hbar, alpha.value()) * m_alpha;
    if (!std::isfinite(v)) throw std::overflow_error("effective_planck overflowed");
    return v;
}

EffectiveConstants EffectiveConstants::make(double hbar, FractionalOrder alpha,
                                            double m_alpha) {
    return EffectiveConstants{hbar, alpha, m_alpha, effective_planck(hbar, alpha, m_alpha)};
}

FractionalAngularMomentum build_spin_half(const EffectiveConstants& constants) {
    const double s = 0.5 * constants.hbar_eff;
    return FractionalAngularMomentum{constants, s * pauli(1), s * pauli(2), s * pauli(3)};
}

CommutatorReport verify_commutators(const FractionalAngularMomentum& am, double tol) {
    const cplx ih(0.0, am.constants.hbar_eff);
    const double h = am.constants.hbar_eff;
    const Mat2 l2 = am.l_squared();
    const std::array<Mat2, 3> l{am.lx, am.ly, am.lz};

    double worst = 0.0;
    auto take = [&worst](const Mat2& residual) {
        worst = std::max(worst, residual.max_abs());
    };

    // [L_i, L_j] = i hbar_eff eps_ijk L_k
    take(commutator(l[0], l[1]) - ih * l[2]);
    take(commutator(l[2], l[0]) - ih * l[1]);
    take(commutator(l[1], l[2]) - ih * l[0]);

    // ladder relations
    take(commutator(am.l_plus(), am.l_minus()) - (2.0 * h) * am.lz);
    take(commutator(am.lz, am.l_plus()) - h * am.l_plus());
    take(commutator(am.lz, am.l_minus()) + h * am.l_minus());

    // L^2 is Casimir
    for (const auto& g : l) take(commutator(l2, g));
    take(commutator(l2, am.l_plus()));
    take(commutator(l2, am.l_minus()));

    return CommutatorReport{worst, tol, worst <= tol};
}

Mat2 helicity_projection(const FractionalAngularMomentum& am,
                         const std::array<double, 3>& p_hat) {
    const double n = std::sqrt(p_hat[0] * p_hat[0] + p_hat[1] * p_hat[1] +
                               p_hat[2] * p_hat[2]);
    if (std::abs(n - 1.0) > 1e-12) throw DomainError("p_hat must be a unit vector");
    return p_hat[0] * am.lx + p_hat[1] * am.ly + p_hat[2] * am.lz;
}

double normalized_helicity(const FractionalAngularMomentum& am, double eigenvalue) {
    return eigenvalue / (0.5 * am.constants.hbar_eff);
}

}  // namespace fracg
