#include "dentage/reliability.hpp"

#include <algorithm>

#include "dentage/age_units.hpp"
#include "dentage/errors.hpp"

namespace dentage {

std::string to_string(ReliabilityLabel label) {
    switch (label) {
        case ReliabilityLabel::low: return "low";
        case ReliabilityLabel::normal: return "normal";
        case ReliabilityLabel::high: return "high";
    }
    return "normal";
}

double tooth_reliability(ToothId tooth, double sigma_days,
                         const std::map<ToothId, ToothStats>& stats) {
    const auto it = stats.find(tooth);
    if (it == stats.end()) {
        throw Error::domain("reliability", "NO_POPULATION_STATS",
                            "no population uncertainty statistics for tooth " + tooth.str());
    }
    const double mean = it->second.mean_days;
    const double std = it->second.std_days;
    if (sigma_days <= mean - std) return 1.0;
    if (sigma_days >= mean + std) return 0.0;
    return (mean + std - sigma_days) / (2.0 * std);
}

double zadeh_aggregate(const std::map<ToothId, double>& reliabilities,
                       const PiecewiseLinear& quantifier) {
    if (reliabilities.empty()) {
        throw Error::domain("reliability", "NO_PREDICTIONS", "no per-tooth reliabilities to aggregate");
    }
    double sum = 0.0;
    for (const auto& [tooth, a] : reliabilities) sum += a;
    return quantifier(sum / static_cast<double>(reliabilities.size()));
}

ReliabilityLabel reliability_label(double aggregate, const ReliabilityCutpoints& cutpoints) {
    if (aggregate < cutpoints.low_below) return ReliabilityLabel::low;
    if (aggregate > cutpoints.high_above) return ReliabilityLabel::high;
    return ReliabilityLabel::normal;
}

SigmaClustering most_predictive_teeth(const std::map<ToothId, ToothPrediction>& predictions,
                                      double eps_years) {
    if (predictions.empty()) {
        throw Error::domain("reliability", "NO_PREDICTIONS", "no predictions to cluster");
    }
    std::vector<ToothId> teeth;
    std::vector<double> sigma_years;
    teeth.reserve(predictions.size());
    for (const auto& [tooth, p] : predictions) {
        teeth.push_back(tooth);
        sigma_years.push_back(days_to_years(p.sigma_days));
    }
    const DbscanResult clusters = dbscan_1d(sigma_years, eps_years, 1);

    SigmaClustering out;
    out.partition.assign(clusters.cluster_count, {});
    for (std::size_t i = 0; i < teeth.size(); ++i) {
        out.partition[clusters.cluster_of[i]].push_back(teeth[i]);
    }
    auto sigma_of = [&](ToothId t) { return predictions.at(t).sigma_days; };
    for (auto& members : out.partition) {
        std::sort(members.begin(), members.end(), [&](ToothId a, ToothId b) {
            if (sigma_of(a) != sigma_of(b)) return sigma_of(a) < sigma_of(b);
            return a < b;  // deterministic tie-break
        });
    }
    std::sort(out.partition.begin(), out.partition.end(),
              [&](const auto& a, const auto& b) { return sigma_of(a.front()) < sigma_of(b.front()); });
    out.most_predictive = out.partition.front();
    return out;
}

ReliabilityAssessment assess_reliability(const std::map<ToothId, ToothPrediction>& predictions,
                                         const Coefficients& coeffs) {
    ReliabilityAssessment out;
    for (const auto& [tooth, p] : predictions) {
        out.per_tooth_reliability.emplace(
            tooth, tooth_reliability(tooth, p.sigma_days, coeffs.population_stats));
    }
    out.aggregate = zadeh_aggregate(out.per_tooth_reliability, coeffs.quantifiers.active_quantifier());
    out.label = reliability_label(out.aggregate, coeffs.reliability_labels);
    SigmaClustering clustering = most_predictive_teeth(predictions, coeffs.dbscan_eps_years);
    out.most_predictive = std::move(clustering.most_predictive);
    out.cluster_partition = std::move(clustering.partition);
    return out;
}

}  // namespace dentage
