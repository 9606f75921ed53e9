#include "fracg/special_functions.hpp"

#include <cmath>
#include <limits>

#include "fracg/errors.hpp"

namespace fracg {

namespace {

// Lanczos coefficients, N=13, g = 6.024680040776729583740234375.
// Numerator/denominator of the rational form of the Lanczos sum; the
// denominator is x(x+1)...(x+11). Theoretical error 1.2e-17, so double
// rounding dominates.
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};

constexpr double kLanczosDen[13] = {
    0.0,        39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};

double lanczos_sum(double x) {
    double num = 0.0;
    double den = 0.0;
    for (int i = 12; i >= 0; --i) {
        num = num * x + kLanczosNum[i];
        den = den * x + kLanczosDen[i];
    }
    return num / den;
}

// Exact factorials (n-1)! for gamma at integer arguments 1..22; entries
// beyond 18! are the correctly rounded doubles.
constexpr double kFactorial[22] = {
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::abs(x - std::round(x)) <= 1e-300;
}

void check_finite(double x) {
    if (!std::isfinite(x)) throw DomainError("special function argument must be finite");
}

double gamma_positive(double x) {
    // x >= 0.5 here
    if (x <= 22.5) {
        const double r = std::round(x);
        if (x == r) return kFactorial[static_cast<int>(r) - 1];
    }
    const double zgh = x + kLanczosG - 0.5;
    return lanczos_sum(x) * std::pow(zgh, x - 0.5) * std::exp(-zgh);
}

// psi Taylor coefficients psi^(n)(x0)/n! at the positive root of psi,
// x0 = 1.461632144968362341262659542325721... (split into hi + lo).
constexpr double kPsiRootHi = 1.4616321449683622;
constexpr double kPsiRootLo = 9.549995429965697e-17;

constexpr double kPsiTaylor[22] = {
    0.9676722454476212,
    -0.4427631689835921,
    0.258499760955651,
    -0.16394270544240652,
    0.10782405069126237,
    -0.07219956125645471,
    0.04880428816414311,
    -0.03316112647484736,
    0.022597648232218104,
    -0.01542476590494896,
    0.010538791616612175,
    -0.007204534386356869,
    0.004926781395729853,
    -0.003369801655439328,
    0.002305126326734928,
    -0.0015769367714301972,
    0.0010788252019162967,
    -0.0007380709389960052,
    0.000504953265834602,
    -0.0003454680251063077,
    0.00023635601564027053,
    -0.00016170622091974803,
};

// -B_{2n}/(2n), n = 1..7: psi(x) ~ ln x - 1/(2x) + sum c_n x^{-2n}
constexpr double kPsiAsymptotic[7] = {
    -1.0 / 12.0,  1.0 / 120.0,        -1.0 / 252.0, 1.0 / 240.0,
    -1.0 / 132.0, 691.0 / 32760.0,    -1.0 / 12.0,
};

double digamma_positive(double x) {
    // x >= 0.5 here
    if (std::abs(x - kPsiRootHi) < 0.2) {
        const double d = (x - kPsiRootHi) - kPsiRootLo;
        double s = 0.0;
        for (int i = 21; i >= 0; --i) s = s * d + kPsiTaylor[i];
        return s * d;
    }
    double r = 0.0;
    while (x < 16.0) {
        r -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double s = 0.0;
    for (int i = 6; i >= 0; --i) s = s * inv2 + kPsiAsymptotic[i];
    return r + std::log(x) - 0.5 / x + s * inv2;
}

}  // namespace

double gamma(double x) {
    check_finite(x);
    if (is_nonpositive_integer(x)) throw PoleError("gamma pole at non-positive integer");
    if (x >= 0.5) return gamma_positive(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return M_PI / (std::sin(M_PI * x) * gamma_positive(1.0 - x));
}

double log_gamma(double x) {
    check_finite(x);
    if (x <= 0.0) throw DomainError("log_gamma requires x > 0");
    if (x < 0.5) return std::log(gamma(x));
    if (x <= 22.5 && x == std::round(x)) return std::log(kFactorial[static_cast<int>(x) - 1]);
    const double zgh = x + kLanczosG - 0.5;
    return std::log(lanczos_sum(x)) + (x - 0.5) * std::log(zgh) - zgh;
}

double digamma(double x) {
    check_finite(x);
    if (is_nonpositive_integer(x)) throw PoleError("digamma pole at non-positive integer");
    if (x >= 0.5) return digamma_positive(x);
    // psi(x) = psi(1-x) - pi cot(pi x)
    return digamma_positive(1.0 - x) - M_PI / std::tan(M_PI * x);
}

}  // namespace fracg
