#ifndef FRACG_LEPTONS_HPP
#define FRACG_LEPTONS_HPP

#include <optional>
#include <string>
#include <vector>

namespace fracg {

/// One charged lepton with its measured and/or QED-predicted g-factor.
/// Mean life is carried as metadata only (nullopt = stable).
struct LeptonRecord {
    std::string name;  // electron | muon | tau
    std::optional<double> g_exp;
    std::optional<double> g_qed;
    std::optional<double> mean_life_s;
    std::string source_exp;
    std::string source_qed;
};

/// At least one g value present, every g in (2.0, 2.01), name non-empty.
/// Throws DomainError otherwise.
void validate(const LeptonRecord& record);

/// Embedded dataset: electron and muon (CODATA 2010 measured values plus
/// the QED predictions), tau (QED prediction only, tagged qed-prediction).
const std::vector<LeptonRecord>& default_leptons();

/// Loads records from a CSV file with header
///   name,g_exp,g_qed,mean_life_s,source_exp,source_qed
/// Empty fields mean "absent"; mean_life_s is "stable" or seconds; lines
/// starting with '#' are comments. Throws std::runtime_error on I/O or
/// parse failure, DomainError on invalid records.
std::vector<LeptonRecord> load_leptons(const std::string& path);

}  // namespace fracg

#endif
