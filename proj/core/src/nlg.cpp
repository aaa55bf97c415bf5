#include "dentage/nlg.hpp"

#include <algorithm>
#include <cmath>

#include "dentage/age_units.hpp"
#include "dentage/errors.hpp"

namespace dentage {

namespace {

const std::string& word(const Coefficients& coeffs, Language lang, const std::string& group,
                        const std::string& key) {
    const auto lang_it = coeffs.words.find(to_string(lang));
    if (lang_it == coeffs.words.end()) {
        throw Error::domain("nlg", "UNSUPPORTED_LANGUAGE",
                            "no lexicon for language '" + to_string(lang) + "'");
    }
    const auto group_it = lang_it->second.find(group);
    if (group_it == lang_it->second.end()) {
        throw Error::domain("nlg", "MISSING_WORD", "no word group '" + group + "'");
    }
    const auto word_it = group_it->second.find(key);
    if (word_it == group_it->second.end()) {
        throw Error::domain("nlg", "MISSING_WORD", "no word '" + key + "' in group '" + group + "'");
    }
    return word_it->second;
}

const std::string& sentence_template(const Coefficients& coeffs, Language lang,
                                     const std::string& rule_id) {
    const auto lang_it = coeffs.templates.find(to_string(lang));
    if (lang_it == coeffs.templates.end()) {
        throw Error::domain("nlg", "UNSUPPORTED_LANGUAGE",
                            "no templates for language '" + to_string(lang) + "'");
    }
    const auto rule_it = lang_it->second.find(rule_id);
    if (rule_it == lang_it->second.end()) {
        throw Error::domain("nlg", "MISSING_TEMPLATE", "no template '" + rule_id + "'");
    }
    return rule_it->second;
}

std::string substitute(const std::string& tpl, const std::map<std::string, std::string>& values) {
    std::string out;
    out.reserve(tpl.size());
    std::size_t pos = 0;
    while (pos < tpl.size()) {
        const std::size_t open = tpl.find('{', pos);
        if (open == std::string::npos) {
            out.append(tpl, pos, std::string::npos);
            break;
        }
        out.append(tpl, pos, open - pos);
        const std::size_t close = tpl.find('}', open);
        if (close == std::string::npos) {
            throw Error::domain("nlg", "BAD_TEMPLATE", "unterminated placeholder in: " + tpl);
        }
        const std::string name = tpl.substr(open + 1, close - open - 1);
        const auto it = values.find(name);
        if (it == values.end()) {
            throw Error::domain("nlg", "MISSING_SLOT", "no value for placeholder {" + name + "}");
        }
        out += it->second;
        pos = close + 1;
    }
    return out;
}

long long slot_int(const Message& m, const std::string& name) {
    return std::get<long long>(m.slots.at(name));
}
double slot_real(const Message& m, const std::string& name) {
    return std::get<double>(m.slots.at(name));
}
const std::string& slot_str(const Message& m, const std::string& name) {
    return std::get<std::string>(m.slots.at(name));
}
const std::vector<int>& slot_teeth(const Message& m, const std::string& name) {
    return std::get<std::vector<int>>(m.slots.at(name));
}

std::string pick_count_label(double proportion, const FuzzyLexicon& lexicon) {
    double best = -1.0;
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < lexicon.labels.size(); ++i) {
        const double mu = lexicon.memberships.at(lexicon.labels[i])(proportion);
        if (mu > best) {
            best = mu;
            tied.assign(1, i);
        } else if (mu == best) {
            tied.push_back(i);
        }
    }
    // Ties prefer the specific extremes (first label covers "none", the last
    // covers "all"), then lexicon order.
    for (const std::size_t i : tied) {
        if (i == 0 || i + 1 == lexicon.labels.size()) return lexicon.labels[i];
    }
    return lexicon.labels[tied.front()];
}

}  // namespace

std::string quantify_count(int developed, int total, const FuzzyLexicon& lexicon) {
    if (total <= 0 || developed < 0 || developed > total) {
        throw Error::domain("nlg", "INVALID_COUNT",
                            "developed/total must satisfy 0 <= developed <= total, total > 0");
    }
    return pick_count_label(static_cast<double>(developed) / static_cast<double>(total), lexicon);
}

std::string quantify_apex(double csm45, const FuzzyLexicon& lexicon) {
    if (csm45 < 0.0 || !std::isfinite(csm45)) {
        throw Error::domain("nlg", "INVALID_CSM", "csm must be finite and >= 0");
    }
    if (csm45 == 0.0) return lexicon.labels.front();  // apices entirely closed
    std::size_t best_index = 1;
    double best = -1.0;
    for (std::size_t i = 1; i < lexicon.labels.size(); ++i) {
        const double mu = lexicon.memberships.at(lexicon.labels[i])(csm45);
        if (mu >= best) {  // ties go to the more-open label
            best = mu;
            best_index = i;
        }
    }
    return lexicon.labels[best_index];
}

DocumentPlan plan_document(const PatientRecord& record, const AgeEstimate& opaque,
                           const ErrorClassification& error,
                           const ReliabilityAssessment& reliability, ReportKind kind,
                           Language language, const Coefficients& coeffs) {
    if (record.predictions.empty()) {
        throw Error::domain("nlg", "NO_PREDICTIONS", "report generation needs >= 1 prediction");
    }

    const double age_years = days_to_years(static_cast<double>(record.age_days));
    const AgeBands& bands = coeffs.age_bands;
    const std::string dentition = age_years < bands.mixed_dentition_from_years ? "deciduous"
                                  : age_years < bands.permanent_dentition_from_years ? "mixed"
                                                                                     : "permanent";
    const std::string category = age_years < bands.adolescent_from_years ? "child"
                                 : age_years < bands.adult_from_years    ? "adolescent"
                                                                         : "adult";
    const std::string sex = record.sex == Sex::female ? "female" : "male";

    DocumentPlan plan;
    plan.kind = kind;
    plan.language = language;

    Message intro;
    intro.kind = MessageKind::intro;
    intro.paragraph = 0;
    intro.slots["sex"] = sex;
    intro.slots["category"] = category;
    intro.slots["dentition"] = dentition;
    intro.slots["real_age_days"] = static_cast<long long>(record.age_days);
    plan.messages.push_back(std::move(intro));

    // Fully developed right-quadrant teeth: csm == 0 means all apices closed.
    int total = 0;
    int developed = 0;
    for (const auto& [tooth, m] : record.measurements) {
        if (!tooth.right_mandibular()) continue;
        ++total;
        if (m.csm == 0.0) ++developed;
    }
    const auto tooth45 = record.measurements.find(ToothId(45));
    if (tooth45 == record.measurements.end()) {
        throw Error::domain("nlg", "MISSING_TOOTH_45",
                            "the apex slot needs tooth 45's measurement");
    }

    Message est;
    est.kind = MessageKind::estimate_explanation;
    est.paragraph = 1;
    est.slots["est_age_days"] = opaque.age_days;
    est.slots["count_label"] = quantify_count(developed, total, coeffs.count_lexicon);
    est.slots["developed"] = static_cast<long long>(developed);
    est.slots["total"] = static_cast<long long>(total);
    est.slots["apex_label"] = quantify_apex(tooth45->second.csm, coeffs.apex_lexicon);
    est.slots["sex"] = sex;
    est.slots["variant"] = std::string(kind == ReportKind::brief ? "short" : "detailed");
    plan.messages.push_back(std::move(est));

    if (kind == ReportKind::detailed) {
        Message err;
        err.kind = MessageKind::error_analysis;
        err.paragraph = 2;
        err.slots["real_age_days"] = static_cast<long long>(record.age_days);
        err.slots["direction"] = std::string(
            error.direction == ErrorDirection::overestimation    ? "overestimation"
            : error.direction == ErrorDirection::underestimation ? "underestimation"
                                                                 : "accurate");
        err.slots["magnitude_days"] = error.magnitude_days;
        err.slots["error_percent"] = error.error_percent;
        plan.messages.push_back(std::move(err));

        Message rel;
        rel.kind = MessageKind::reliability_statement;
        rel.paragraph = 2;
        rel.slots["level"] = to_string(reliability.label);
        std::vector<int> teeth;
        teeth.reserve(reliability.most_predictive.size());
        for (const ToothId t : reliability.most_predictive) teeth.push_back(t.code());
        rel.slots["teeth"] = std::move(teeth);
        plan.messages.push_back(std::move(rel));

        Message method;
        method.kind = MessageKind::method_paragraph;
        method.paragraph = 3;
        method.dynamic = false;
        plan.messages.push_back(std::move(method));
    }
    return plan;
}

std::string render_age(double age_days, Language language, const Coefficients& coeffs) {
    const YearsMonths ym = age_to_years_months(age_days);
    auto unit = [&](const std::string& key) { return word(coeffs, language, "age_units", key); };
    std::string years_part, months_part;
    if (ym.years > 0) {
        years_part = std::to_string(ym.years) + " " + unit(ym.years == 1 ? "year_one" : "year_many");
    }
    if (ym.months > 0 || ym.years == 0) {
        months_part =
            std::to_string(ym.months) + " " + unit(ym.months == 1 ? "month_one" : "month_many");
    }
    if (years_part.empty()) return months_part;
    if (months_part.empty()) return years_part;
    return years_part + unit("joiner") + months_part;
}

std::string render_tooth_list(const std::vector<ToothId>& teeth, Language language,
                              const Coefficients& coeffs) {
    const std::string& item_tpl = word(coeffs, language, "tooth_list", "item");
    const std::string& comma = word(coeffs, language, "tooth_list", "comma");
    const std::string& conjunction = word(coeffs, language, "tooth_list", "conjunction");
    std::vector<std::string> items;
    items.reserve(teeth.size());
    for (const ToothId t : teeth) {
        items.push_back(substitute(item_tpl, {{"code", t.str()}}));
    }
    if (items.empty()) return "";
    if (items.size() == 1) return items.front();
    std::string out = items.front();
    for (std::size_t i = 1; i + 1 < items.size(); ++i) out += comma + items[i];
    out += conjunction + items.back();
    return out;
}

Report realize(const DocumentPlan& plan, const Coefficients& coeffs) {
    if (plan.messages.empty() || plan.messages.front().kind != MessageKind::intro) {
        throw Error::domain("nlg", "PLAN_MALFORMED", "the introduction message must come first");
    }
    const Language lang = plan.language;

    Report report;
    report.language = lang;
    report.kind = plan.kind;

    auto emit = [&](const std::string& rule_id, const std::map<std::string, std::string>& values,
                    bool dynamic, int paragraph) {
        report.sentences.push_back(SentenceRecord{
            substitute(sentence_template(coeffs, lang, rule_id), values), rule_id, dynamic,
            paragraph});
    };

    for (const Message& msg : plan.messages) {
        switch (msg.kind) {
            case MessageKind::intro: {
                const std::string subject_key = slot_str(msg, "sex") + "_" + slot_str(msg, "category");
                emit("intro",
                     {{"subject", word(coeffs, lang, "subject", subject_key)},
                      {"real_age",
                       render_age(static_cast<double>(slot_int(msg, "real_age_days")), lang, coeffs)},
                      {"dentition", word(coeffs, lang, "dentition", slot_str(msg, "dentition"))}},
                     msg.dynamic, msg.paragraph);
                break;
            }
            case MessageKind::estimate_explanation: {
                const std::string& variant = slot_str(msg, "variant");
                const std::string count_clause =
                    substitute(word(coeffs, lang, variant == "short" ? "count_short" : "count_detailed",
                                    slot_str(msg, "count_label")),
                               {{"pronoun", word(coeffs, lang, "pronoun", slot_str(msg, "sex"))},
                                {"developed", std::to_string(slot_int(msg, "developed"))},
                                {"total", std::to_string(slot_int(msg, "total"))}});
                emit(variant == "short" ? "estimate_short" : "estimate_detailed",
                     {{"est_age", render_age(slot_real(msg, "est_age_days"), lang, coeffs)},
                      {"count_clause", count_clause},
                      {"apex", word(coeffs, lang, "apex", slot_str(msg, "apex_label"))}},
                     msg.dynamic, msg.paragraph);
                break;
            }
            case MessageKind::error_analysis: {
                emit("error_real_age",
                     {{"real_age",
                       render_age(static_cast<double>(slot_int(msg, "real_age_days")), lang, coeffs)}},
                     msg.dynamic, msg.paragraph);
                const std::string& direction = slot_str(msg, "direction");
                if (direction == "accurate") {
                    emit("error_accurate", {}, msg.dynamic, msg.paragraph);
                } else {
                    emit("error_directional",
                         {{"direction", word(coeffs, lang, "direction", direction)},
                          {"magnitude", render_age(slot_real(msg, "magnitude_days"), lang, coeffs)}},
                         msg.dynamic, msg.paragraph);
                }
                break;
            }
            case MessageKind::reliability_statement: {
                const std::vector<int>& codes = slot_teeth(msg, "teeth");
                std::vector<ToothId> teeth;
                teeth.reserve(codes.size());
                for (const int c : codes) teeth.emplace_back(c);
                const std::string list = render_tooth_list(teeth, lang, coeffs);
                const std::string& level = slot_str(msg, "level");
                const std::string plurality = teeth.size() == 1 ? "singular" : "plural";
                if (level == "normal") {
                    // A normal level is not worth a sentence; the most
                    // predictive teeth are stated directly.
                    emit("reliability_normal_" + plurality, {{"list", list}}, msg.dynamic,
                         msg.paragraph);
                } else {
                    emit("reliability_level_" + plurality,
                         {{"level", word(coeffs, lang, "level", level)}, {"list", list}},
                         msg.dynamic, msg.paragraph);
                }
                break;
            }
            case MessageKind::method_paragraph: {
                for (const char* rule : {"method_1", "method_2", "method_3", "method_4", "method_5"}) {
                    emit(rule, {}, false, msg.paragraph);
                }
                break;
            }
        }
    }

    const auto disclaimer_it = coeffs.disclaimer.find(to_string(lang));
    if (disclaimer_it == coeffs.disclaimer.end()) {
        throw Error::domain("nlg", "MISSING_DISCLAIMER",
                            "no disclaimer for language '" + to_string(lang) + "'");
    }
    report.disclaimer = disclaimer_it->second;

    int max_paragraph = 0;
    for (const SentenceRecord& s : report.sentences) max_paragraph = std::max(max_paragraph, s.paragraph);
    report.sentences.push_back(
        SentenceRecord{report.disclaimer, "disclaimer", false, max_paragraph + 1});

    std::string body;
    for (int paragraph = 1; paragraph <= max_paragraph; ++paragraph) {
        std::string text;
        for (const SentenceRecord& s : report.sentences) {
            if (s.paragraph != paragraph) continue;
            if (!text.empty()) text += " ";
            text += s.text;
        }
        if (text.empty()) continue;
        if (!body.empty()) body += "\n\n";
        body += text;
    }
    report.body = std::move(body);
    for (const SentenceRecord& s : report.sentences) {
        if (s.paragraph == 0) {
            report.introduction = s.text;
            break;
        }
    }
    return report;
}

}  // namespace dentage
