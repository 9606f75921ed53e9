#ifndef FRACG_MATRIX_HPP
#define FRACG_MATRIX_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "fracg/errors.hpp"

namespace fracg {

using cplx = std::complex<double>;

/// Dense NxN complex matrix, value semantics. N is 2 or 4 everywhere in
/// this project (Pauli and gamma carriers).
template <std::size_t N>
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    static ComplexMatrix identity() {
        ComplexMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * N + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * N + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) a_[i] += o.a_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) a_[i] -= o.a_[i];
        return *this;
    }
    ComplexMatrix& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx aik = a(i, k);
                for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::array<cplx, N * N> a_{};
};

using Mat2 = ComplexMatrix<2>;
using Mat4 = ComplexMatrix<4>;

template <std::size_t N>
using ComplexVec = std::array<cplx, N>;

using Vec2 = ComplexVec<2>;
using Vec4 = ComplexVec<4>;

template <std::size_t N>
ComplexMatrix<N> commutator(const ComplexMatrix<N>& a, const ComplexMatrix<N>& b) {
    return a * b - b * a;
}

template <std::size_t N>
ComplexMatrix<N> anticommutator(const ComplexMatrix<N>& a, const ComplexMatrix<N>& b) {
    return a * b + b * a;
}

template <std::size_t N>
ComplexVec<N> operator*(const ComplexMatrix<N>& m, const ComplexVec<N>& v) {
    ComplexVec<N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r[i] += m(i, j) * v[j];
    return r;
}

template <std::size_t N>
double norm(const ComplexVec<N>& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

/// Eigenvalues {lo, hi} of a 2x2 Hermitian matrix (real parts taken).
inline std::array<double, 2> hermitian_eigenvalues(const Mat2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mid = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mid - r, mid + r};
}

/// Principal square root of a 2x2 Hermitian positive-semidefinite matrix:
/// sqrt(M) = (M + sqrt(det) I) / sqrt(tr + 2 sqrt(det)).
inline Mat2 hermitian_sqrt(const Mat2& m) {
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double tr = m.trace().real();
    const double s = std::sqrt(std::max(det, 0.0));
    const double t2 = tr + 2.0 * s;
    if (t2 <= 0.0) {
        if (std::abs(tr) < 1e-14) return Mat2{};  // zero matrix
        throw DomainError("hermitian_sqrt requires a positive-semidefinite matrix");
    }
    Mat2 r = m;
    r(0, 0) += s;
    r(1, 1) += s;
    return r *= 1.0 / std::sqrt(t2);
}

}  // namespace fracg

#endif
