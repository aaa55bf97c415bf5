#pragma once

#include <map>
#include <vector>

#include "dentage/cluster.hpp"
#include "dentage/config.hpp"
#include "dentage/records.hpp"

namespace dentage {

enum class ReliabilityLabel { low, normal, high };

std::string to_string(ReliabilityLabel label);

// Fuzzy reliability of one tooth's prediction from its uncertainty, anchored
// at the population mean/std for that tooth: 1 at or below mean - std, 0 at
// or above mean + std, linear in between.
double tooth_reliability(ToothId tooth, double sigma_days,
                         const std::map<ToothId, ToothStats>& stats);

// Zadeh's relative-quantifier evaluation of the mean per-tooth reliability.
double zadeh_aggregate(const std::map<ToothId, double>& reliabilities,
                       const PiecewiseLinear& quantifier);

// low strictly below `low_below`, high strictly above `high_above`,
// boundaries belong to normal.
ReliabilityLabel reliability_label(double aggregate, const ReliabilityCutpoints& cutpoints);

// Sigma clusters in years via DBSCAN(eps, minPts = 1); teeth within a cluster
// are ordered by ascending sigma (FDI code breaks ties), clusters by their
// smallest sigma. `most_predictive` is the cluster containing the minimum.
struct SigmaClustering {
    std::vector<ToothId> most_predictive;
    std::vector<std::vector<ToothId>> partition;
};

SigmaClustering most_predictive_teeth(const std::map<ToothId, ToothPrediction>& predictions,
                                      double eps_years);

struct ReliabilityAssessment {
    std::map<ToothId, double> per_tooth_reliability;
    double aggregate = 0.0;
    ReliabilityLabel label = ReliabilityLabel::normal;
    std::vector<ToothId> most_predictive;
    std::vector<std::vector<ToothId>> cluster_partition;
};

ReliabilityAssessment assess_reliability(const std::map<ToothId, ToothPrediction>& predictions,
                                         const Coefficients& coeffs);

}  // namespace dentage
