#ifndef FRACG_GOLDEN_HPP
#define FRACG_GOLDEN_HPP

#include <array>

namespace fracg {

/// Reference (g, alpha) pairs for the embedded lepton dataset. The alpha
/// digits beyond double precision are kept in the literals for provenance;
/// verification is capped at 1e-12 absolute (see the golden CSV note).
struct GoldenEntry {
    const char* lepton;
    const char* source;
    double g;
    double alpha;
};

inline constexpr std::array<GoldenEntry, 5> kGoldenSection{{
    {"electron", "exp", 2.00231930436146, 0.9981697906061296726},
    {"muon", "exp", 2.00233184182, 0.9981598882409105161},
    {"tau", "qed", 2.00235442, 0.998142055249517567},
    {"electron", "qed", 2.00231930436364, 0.9981697906044078681},
    {"muon", "qed", 2.002331694362, 0.9981600047070900225},
}};

inline constexpr double kGoldenAlphaTol = 1e-12;

}  // namespace fracg

#endif
