#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dentage/config.hpp"
#include "dentage/records.hpp"

namespace dentage {

// Deterministic synthetic cohort: same (n, seed, params, anchors) always
// produces the same records, byte for byte once serialized.
struct SyntheticCohort {
    std::uint64_t seed = 0;
    std::vector<PatientRecord> records;
    SyntheticParams ground_truth;
};

// Per-tooth sigma draws are centered on `sigma_anchors` (the population
// uncertainty statistics) and spread by the params' noise scales.
SyntheticCohort generate_cohort(int n, std::uint64_t seed, const SyntheticParams& params,
                                const std::map<ToothId, ToothStats>& sigma_anchors);

inline SyntheticCohort generate_cohort(int n, std::uint64_t seed, const Coefficients& coeffs) {
    return generate_cohort(n, seed, coeffs.synthetic, coeffs.population_stats);
}

}  // namespace dentage
