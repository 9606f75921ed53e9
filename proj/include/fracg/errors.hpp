#ifndef FRACG_ERRORS_HPP
#define FRACG_ERRORS_HPP

#include <stdexcept>

namespace fracg {

// Argument hits a pole of gamma/digamma (non-positive integer).
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Argument outside the domain an operation is defined on.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Non-integrable kernel (alpha = 1 passed to the integral-form evaluator).
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Root finder: no sign change over the bracket.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root finder: iteration budget exhausted.
struct MaxIterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Plane wave does not satisfy the required mass-shell condition.
struct OffShellError : std::domain_error {
    using std::domain_error::domain_error;
};

// Gordon decomposition fed spinors that do not solve the plane-wave Dirac
// equation at the stated tolerance.
struct OnShellError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace fracg

#endif
