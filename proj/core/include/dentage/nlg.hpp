#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dentage/config.hpp"
#include "dentage/estimate.hpp"
#include "dentage/records.hpp"
#include "dentage/reliability.hpp"

namespace dentage {

enum class MessageKind {
    intro,
    estimate_explanation,
    error_analysis,
    reliability_statement,
    method_paragraph,
};

// Every dynamic slot value is traceable to a record field or a computed
// estimate; static messages carry no slots at all.
using SlotValue = std::variant<long long, double, std::string, std::vector<int>>;

struct Message {
    MessageKind kind = MessageKind::intro;
    int paragraph = 0;  // 0 = introduction, 1.. = body paragraphs
    bool dynamic = true;
    std::map<std::string, SlotValue> slots;
};

struct DocumentPlan {
    ReportKind kind = ReportKind::brief;
    Language language = Language::en;
    std::vector<Message> messages;  // intro always first
};

struct SentenceRecord {
    std::string text;
    std::string rule_id;  // template the sentence was realized from
    bool dynamic = true;
    int paragraph = 0;
};

struct Report {
    std::string introduction;
    std::string body;  // paragraphs separated by blank lines
    std::string disclaimer;
    Language language = Language::en;
    ReportKind kind = ReportKind::brief;
    std::vector<SentenceRecord> sentences;
};

// Maximum-membership label for the proportion of fully developed teeth; ties
// prefer the extremes (first/last label), then lexicon order.
std::string quantify_count(int developed, int total, const FuzzyLexicon& lexicon);

// Maximum-membership label for the tooth-45 apex aperture; csm == 0 is the
// completely-closed label by definition, other ties go to the more-open side.
std::string quantify_apex(double csm45, const FuzzyLexicon& lexicon);

// Stage 1: rule-driven content selection. The short plan carries the intro
// plus one estimate-explanation message; the detailed plan adds the error
// analysis, the reliability statement (level suppressed when "normal") and
// the static method paragraph.
DocumentPlan plan_document(const PatientRecord& record, const AgeEstimate& opaque,
                           const ErrorClassification& error,
                           const ReliabilityAssessment& reliability, ReportKind kind,
                           Language language, const Coefficients& coeffs);

// Stages 2-3: lexicalization and deterministic template realization with
// sex/number agreement and language-specific conjunctions.
Report realize(const DocumentPlan& plan, const Coefficients& coeffs);

// Rendering helpers shared with the faithfulness checks.
std::string render_age(double age_days, Language language, const Coefficients& coeffs);
std::string render_tooth_list(const std::vector<ToothId>& teeth, Language language,
                              const Coefficients& coeffs);

}  // namespace dentage
