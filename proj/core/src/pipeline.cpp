#include "dentage/pipeline.hpp"

#include <json.hpp>

#include "dentage/errors.hpp"

namespace dentage {

ReportBundle build_report(const PatientStore& patients, const Coefficients& coeffs,
                          const ReportRequest& request) {
    const PatientRecord* record = patients.find(request.patient_id);
    if (record == nullptr) {
        throw Error::domain("app", "UNKNOWN_PATIENT",
                            "no patient with id '" + request.patient_id + "'");
    }
    if (const auto violations = validate_record(*record); !violations.empty()) {
        throw Error::domain("app", "INVALID_RECORD",
                            "record '" + record->id + "' violates " +
                                std::to_string(violations.size()) + " invariant(s): " +
                                violations.front().code);
    }

    ReportBundle bundle;
    bundle.patient_id = record->id;
    bundle.opg_path = record->opg_path;
    bundle.heatmap_path = record->heatmap_path;
    bundle.opaque = aggregate_opaque(record->predictions, coeffs.penalty_p);
    bundle.error = classify_error(static_cast<double>(record->age_days), bundle.opaque.age_days);
    bundle.reliability = assess_reliability(record->predictions, coeffs);
    const DocumentPlan plan = plan_document(*record, bundle.opaque, bundle.error,
                                            bundle.reliability, request.detail, request.language,
                                            coeffs);
    bundle.report = realize(plan, coeffs);
    return bundle;
}

std::string render_report_text(const ReportBundle& bundle) {
    return bundle.report.introduction + "\n\n" + bundle.report.body + "\n\n" +
           bundle.report.disclaimer + "\n";
}

std::string render_report_json(const ReportBundle& bundle) {
    nlohmann::json sentences = nlohmann::json::array();
    for (const SentenceRecord& s : bundle.report.sentences) {
        sentences.push_back(nlohmann::json{{"text", s.text},
                                           {"rule_id", s.rule_id},
                                           {"kind", s.dynamic ? "dynamic" : "static"},
                                           {"paragraph", s.paragraph}});
    }
    const nlohmann::json doc{
        {"patient_id", bundle.patient_id},
        {"language", to_string(bundle.report.language)},
        {"detail", to_string(bundle.report.kind)},
        {"introduction", bundle.report.introduction},
        {"body", bundle.report.body},
        {"disclaimer", bundle.report.disclaimer},
        {"sentences", std::move(sentences)},
        {"opg_path", bundle.opg_path},
        {"heatmap_path",
         bundle.heatmap_path ? nlohmann::json(*bundle.heatmap_path) : nlohmann::json(nullptr)}};
    return doc.dump(2) + "\n";
}

}  // namespace dentage
