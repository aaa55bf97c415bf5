#include "dentage/records.hpp"

#include <cmath>

namespace dentage {

namespace {

constexpr double kArithmeticTol = 1e-9;

void check_measurement(const ToothId& tooth, const ToothMeasurement& m,
                       std::vector<Violation>& out) {
    if (!tooth.posterior_mandibular()) {
        out.push_back({"NON_POSTERIOR_TOOTH", tooth,
                       "measurements accepted only for teeth 34-38 and 44-48"});
    }
    if (!(m.height_px > 0.0)) {
        out.push_back({"NONPOSITIVE_HEIGHT", tooth, "height_px must be > 0"});
    }
    if (!(m.width_px > 0.0)) {
        out.push_back({"NONPOSITIVE_WIDTH", tooth, "width_px must be > 0"});
    }
    if (m.came1_px < 0.0) {
        out.push_back({"NEGATIVE_APERTURE", tooth, "came1_px must be >= 0"});
    }
    if (m.came2_px && *m.came2_px < 0.0) {
        out.push_back({"NEGATIVE_APERTURE", tooth, "came2_px must be >= 0"});
    }
    if (m.came2_px && !tooth.molar()) {
        out.push_back({"CAME2_ON_NON_MOLAR", tooth, "came2_px is only meaningful for molars"});
    }
    if (m.csm < 0.0) {
        out.push_back({"NEGATIVE_CSM", tooth, "csm must be >= 0"});
    }
    if (m.height_px > 0.0 && m.width_px > 0.0) {
        const double expected_ratio = m.height_px / m.width_px;
        if (std::abs(m.ratio - expected_ratio) > kArithmeticTol) {
            out.push_back({"RATIO_MISMATCH", tooth,
                           "ratio " + std::to_string(m.ratio) + " != height/width " +
                               std::to_string(expected_ratio)});
        }
        const double expected_csm = (m.came1_px + m.came2_px.value_or(0.0)) / m.height_px;
        if (std::abs(m.csm - expected_csm) > kArithmeticTol) {
            out.push_back({"CSM_MISMATCH", tooth,
                           "csm " + std::to_string(m.csm) + " != apertures/height " +
                               std::to_string(expected_csm)});
        }
    }
}

void check_prediction(const ToothId& tooth, const ToothPrediction& p,
                      std::vector<Violation>& out) {
    if (!tooth.posterior_mandibular()) {
        out.push_back({"NON_POSTERIOR_TOOTH", tooth,
                       "predictions accepted only for teeth 34-38 and 44-48"});
    }
    if (!(p.mu_days > 0.0)) {
        out.push_back({"NONPOSITIVE_MU", tooth, "mu_days must be > 0"});
    }
    if (!(p.sigma_days > 0.0)) {
        out.push_back({"NONPOSITIVE_SIGMA", tooth,
                       "sigma_days must be > 0 (degenerate predictions are rejected at ingest)"});
    }
}

}  // namespace

std::vector<Violation> validate_record(const PatientRecord& record) {
    std::vector<Violation> out;
    if (record.id.empty()) {
        out.push_back({"EMPTY_ID", std::nullopt, "patient id must be non-empty"});
    }
    if (record.age_days <= 0) {
        out.push_back({"NONPOSITIVE_AGE", std::nullopt, "age_days must be > 0"});
    }
    for (const auto& [tooth, measurement] : record.measurements) {
        check_measurement(tooth, measurement, out);
    }
    for (const auto& [tooth, prediction] : record.predictions) {
        check_prediction(tooth, prediction, out);
    }
    return out;
}

}  // namespace dentage
