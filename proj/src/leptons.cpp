#include "fracg/leptons.hpp"

#include <fstream>
#include <sstream>

#include "fracg/errors.hpp"

namespace fracg {

void validate(const LeptonRecord& record) {
    if (record.name.empty()) throw DomainError("lepton record needs a name");
    if (!record.g_exp && !record.g_qed)
        throw DomainError("lepton record needs at least one g value: " + record.name);
    for (const auto& g : {record.g_exp, record.g_qed}) {
        if (g && !(*g > 2.0 && *g < 2.01))
            throw DomainError("g value out of range (2.0, 2.01) for " + record.name);
    }
}

const std::vector<LeptonRecord>& default_leptons() {
    static const std::vector<LeptonRecord> table = [] {
        std::vector<LeptonRecord> v;
        v.push_back({"electron", 2.00231930436146, 2.00231930436364, std::nullopt,
                     "codata-2010", "qed"});
        v.push_back({"muon", 2.00233184182, 2.002331694362, 1.0e-6,
                     "codata-2010", "qed"});
        v.push_back({"tau", std::nullopt, 2.00235442, 1.0e-15,
                     "", "qed-prediction"});
        for (const auto& r : v) validate(r);
        return v;
    }();
    return table;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::optional<double> parse_optional(const std::string& s, const std::string& what) {
    if (s.empty()) return std::nullopt;
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("cannot parse " + what + " value '" + s + "'");
    }
}

}  // namespace

std::vector<LeptonRecord> load_leptons(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lepton data file: " + path);

    std::vector<LeptonRecord> out;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (split_csv_line(line) !=
                std::vector<std::string>{"name", "g_exp", "g_qed", "mean_life_s",
                                         "source_exp", "source_qed"})
                throw std::runtime_error("unexpected lepton CSV header: " + line);
            header_seen = true;
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 6)
            throw std::runtime_error("expected 6 CSV fields, got " +
                                     std::to_string(f.size()) + ": " + line);
        LeptonRecord r;
        r.name = f[0];
        r.g_exp = parse_optional(f[1], "g_exp");
        r.g_qed = parse_optional(f[2], "g_qed");
        if (f[3] != "stable") r.mean_life_s = parse_optional(f[3], "mean_life_s");
        r.source_exp = f[4];
        r.source_qed = f[5];
        validate(r);
        out.push_back(std::move(r));
    }
    if (!header_seen) throw std::runtime_error("lepton data file has no header: " + path);
    if (out.empty()) throw std::runtime_error("lepton data file has no records: " + path);
    return out;
}

}  // namespace fracg
