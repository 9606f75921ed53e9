#ifndef FRACG_VERIFY_HPP
#define FRACG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracg/leptons.hpp"

namespace fracg {

struct SuiteResult {
    std::string name;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerifyConfig {
    std::uint64_t seed = 20130817;
    // restrict every alpha grid to this single value (classical checks etc.)
    std::optional<double> alpha_restrict;
    std::vector<LeptonRecord> dataset = default_leptons();
};

/// Runs every invariant suite (special functions, fractional-derivative
/// cross-validation, spin algebra, gamma-basis identities, Gordon closure,
/// gauge phase, g-factor properties and the golden table) and returns one
/// result per suite. Deterministic for a fixed config.
std::vector<SuiteResult> run_verification(const VerifyConfig& config);

}  // namespace fracg

#endif
