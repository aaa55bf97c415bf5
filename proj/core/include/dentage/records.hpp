#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dentage/fdi.hpp"

namespace dentage {

enum class Sex { female, male };  // scored 0 / 1 in the regression models

inline double sex_score(Sex s) { return s == Sex::male ? 1.0 : 0.0; }

// Manual per-tooth annotation. All lengths are in pixels; every image in a
// dataset is assumed to share pixel dimensions, so no DPI metadata is kept.
struct ToothMeasurement {
    double height_px = 0.0;
    double width_px = 0.0;
    double ratio = 0.0;                  // height_px / width_px
    double came1_px = 0.0;               // first apex aperture; 0 = root fully developed
    std::optional<double> came2_px;      // second aperture, molars only
    double csm = 0.0;                    // (came1 + came2) / height; 0 = all apices closed
};

// Opaque-model output for one tooth: a normal age distribution.
struct ToothPrediction {
    double mu_days = 0.0;
    double sigma_days = 0.0;
};

struct PatientRecord {
    std::string id;
    long long age_days = 0;  // chronological age
    Sex sex = Sex::female;
    std::string opg_path;
    std::optional<std::string> heatmap_path;
    std::map<ToothId, ToothMeasurement> measurements;
    std::map<ToothId, ToothPrediction> predictions;
};

// A violation is data, not a failure: code + offending tooth (when per-tooth)
// + human-readable detail.
struct Violation {
    std::string code;
    std::optional<ToothId> tooth;
    std::string detail;
};

// Checks every record invariant; an empty result means the record is valid.
// Idempotent and insensitive to tooth insertion order.
std::vector<Violation> validate_record(const PatientRecord& record);

}  // namespace dentage
