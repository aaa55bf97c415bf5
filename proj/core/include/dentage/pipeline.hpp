#pragma once

#include <optional>
#include <string>

#include "dentage/config.hpp"
#include "dentage/estimate.hpp"
#include "dentage/nlg.hpp"
#include "dentage/reliability.hpp"
#include "dentage/store.hpp"

namespace dentage {

struct ReportRequest {
    std::string patient_id;
    Language language = Language::en;
    ReportKind detail = ReportKind::detailed;
};

// A realized report plus the image references and the intermediate results
// the report was computed from.
struct ReportBundle {
    std::string patient_id;
    Report report;
    std::string opg_path;
    std::optional<std::string> heatmap_path;
    AgeEstimate opaque;
    ErrorClassification error;
    ReliabilityAssessment reliability;
};

// validate -> aggregate -> error classification -> reliability -> plan ->
// realize. Throws UNKNOWN_PATIENT when the id is not in the store.
ReportBundle build_report(const PatientStore& patients, const Coefficients& coeffs,
                          const ReportRequest& request);

// Plain-text rendering: introduction, body and disclaimer separated by blank
// lines. Identical bytes for identical requests, on every surface.
std::string render_report_text(const ReportBundle& bundle);

// Structured document (introduction, body, sentences with provenance,
// disclaimer, image paths); the service returns exactly these bytes.
std::string render_report_json(const ReportBundle& bundle);

}  // namespace dentage
