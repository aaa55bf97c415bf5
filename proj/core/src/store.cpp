#include "dentage/store.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dentage/errors.hpp"

namespace dentage {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw Error::parse("store", "SCHEMA_VIOLATION", where + ": " + what);
}

[[noreturn]] void constraint_error(const std::string& field, const std::string& what) {
    throw Error::parse("store", "CONSTRAINT_VIOLATION", field + ": " + what);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    if (!obj.is_object()) schema_error(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) schema_error(where, "unknown field '" + key + "'");
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
    return *it;
}

double get_number(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number()) schema_error(where + "." + key, "expected a number");
    return v.get<double>();
}

long long get_integer(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number_integer()) schema_error(where + "." + key, "expected an integer");
    return v.get<long long>();
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) schema_error(where + "." + key, "expected a string");
    return v.get<std::string>();
}

ToothId parse_tooth_key(const std::string& key, const std::string& where) {
    int code = 0;
    try {
        std::size_t consumed = 0;
        code = std::stoi(key, &consumed);
        if (consumed != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
        schema_error(where, "tooth key '" + key + "' is not an FDI code");
    }
    try {
        return ToothId(code);
    } catch (const Error& e) {
        schema_error(where, e.what());
    }
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error::parse("store", "PARSE_ERROR", e.what());
    }
}

// ---- patients ----

PatientRecord parse_patient(const json& obj, const std::string& where) {
    check_keys(obj, {"id", "age_days", "sex", "opg_path", "heatmap_path", "teeth", "predictions"},
               where);
    PatientRecord rec;
    rec.id = get_string(obj, "id", where);
    rec.age_days = get_integer(obj, "age_days", where);
    const std::string sex = get_string(obj, "sex", where);
    if (sex == "F") {
        rec.sex = Sex::female;
    } else if (sex == "M") {
        rec.sex = Sex::male;
    } else {
        schema_error(where + ".sex", "expected \"M\" or \"F\", got \"" + sex + "\"");
    }
    rec.opg_path = get_string(obj, "opg_path", where);
    if (obj.contains("heatmap_path")) {
        rec.heatmap_path = get_string(obj, "heatmap_path", where);
    }
    const json& teeth = require(obj, "teeth", where);
    if (!teeth.is_object()) schema_error(where + ".teeth", "expected an object");
    for (const auto& [key, tooth_obj] : teeth.items()) {
        const std::string tooth_where = where + ".teeth." + key;
        const ToothId tooth = parse_tooth_key(key, tooth_where);
        check_keys(tooth_obj, {"height_px", "width_px", "ratio", "came1_px", "came2_px", "csm"},
                   tooth_where);
        ToothMeasurement m;
        m.height_px = get_number(tooth_obj, "height_px", tooth_where);
        m.width_px = get_number(tooth_obj, "width_px", tooth_where);
        m.ratio = get_number(tooth_obj, "ratio", tooth_where);
        m.came1_px = get_number(tooth_obj, "came1_px", tooth_where);
        if (tooth_obj.contains("came2_px")) {
            m.came2_px = get_number(tooth_obj, "came2_px", tooth_where);
        }
        m.csm = get_number(tooth_obj, "csm", tooth_where);
        rec.measurements.emplace(tooth, m);
    }
    const json& predictions = require(obj, "predictions", where);
    if (!predictions.is_object()) schema_error(where + ".predictions", "expected an object");
    for (const auto& [key, pred_obj] : predictions.items()) {
        const std::string pred_where = where + ".predictions." + key;
        const ToothId tooth = parse_tooth_key(key, pred_where);
        check_keys(pred_obj, {"mu_days", "sigma_days"}, pred_where);
        ToothPrediction p;
        p.mu_days = get_number(pred_obj, "mu_days", pred_where);
        p.sigma_days = get_number(pred_obj, "sigma_days", pred_where);
        rec.predictions.emplace(tooth, p);
    }
    return rec;
}

json measurement_to_json(const ToothMeasurement& m) {
    json obj{{"height_px", m.height_px}, {"width_px", m.width_px},   {"ratio", m.ratio},
             {"came1_px", m.came1_px},   {"csm", m.csm}};
    if (m.came2_px) obj["came2_px"] = *m.came2_px;
    return obj;
}

json patient_to_json(const PatientRecord& rec) {
    json obj{{"id", rec.id},
             {"age_days", rec.age_days},
             {"sex", rec.sex == Sex::female ? "F" : "M"},
             {"opg_path", rec.opg_path}};
    if (rec.heatmap_path) obj["heatmap_path"] = *rec.heatmap_path;
    json teeth = json::object();
    for (const auto& [tooth, m] : rec.measurements) teeth[tooth.str()] = measurement_to_json(m);
    obj["teeth"] = std::move(teeth);
    json predictions = json::object();
    for (const auto& [tooth, p] : rec.predictions) {
        predictions[tooth.str()] = json{{"mu_days", p.mu_days}, {"sigma_days", p.sigma_days}};
    }
    obj["predictions"] = std::move(predictions);
    return obj;
}

// ---- coefficients ----

PiecewiseLinear parse_membership(const json& obj, const std::string& where) {
    check_keys(obj, {"points", "clamp_left", "clamp_right"}, where);
    const json& pts = require(obj, "points", where);
    if (!pts.is_array() || pts.empty()) schema_error(where + ".points", "expected a non-empty array");
    std::vector<std::pair<double, double>> points;
    points.reserve(pts.size());
    for (const json& p : pts) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            schema_error(where + ".points", "each knot must be [x, y]");
        }
        points.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    const bool clamp_left = obj.value("clamp_left", false);
    const bool clamp_right = obj.value("clamp_right", false);
    try {
        return PiecewiseLinear(std::move(points), clamp_left, clamp_right);
    } catch (const Error& e) {
        constraint_error(where, e.what());
    }
}

json membership_to_json(const PiecewiseLinear& pl) {
    json pts = json::array();
    for (const auto& [x, y] : pl.points()) pts.push_back(json::array({x, y}));
    json obj{{"points", std::move(pts)}};
    if (pl.clamp_left()) obj["clamp_left"] = true;
    if (pl.clamp_right()) obj["clamp_right"] = true;
    return obj;
}

FuzzyLexicon parse_lexicon(const json& obj, const std::string& where) {
    check_keys(obj, {"labels", "memberships"}, where);
    FuzzyLexicon lex;
    const json& labels = require(obj, "labels", where);
    if (!labels.is_array() || labels.size() < 2) {
        constraint_error(where + ".labels", "need at least two ordered labels");
    }
    for (const json& l : labels) {
        if (!l.is_string()) schema_error(where + ".labels", "labels must be strings");
        lex.labels.push_back(l.get<std::string>());
    }
    const json& memberships = require(obj, "memberships", where);
    if (!memberships.is_object()) schema_error(where + ".memberships", "expected an object");
    for (const auto& [key, m] : memberships.items()) {
        lex.memberships.emplace(key, parse_membership(m, where + ".memberships." + key));
    }
    for (const std::string& label : lex.labels) {
        if (!lex.memberships.count(label)) {
            constraint_error(where, "label '" + label + "' has no membership function");
        }
    }
    return lex;
}

std::map<ToothId, ToothStats> parse_population_stats(const json& obj, const std::string& where) {
    if (!obj.is_object()) schema_error(where, "expected an object");
    std::map<ToothId, ToothStats> out;
    for (const auto& [key, stats_obj] : obj.items()) {
        const std::string stat_where = where + "." + key;
        const ToothId tooth = parse_tooth_key(key, stat_where);
        check_keys(stats_obj, {"mean_days", "std_days"}, stat_where);
        ToothStats st;
        st.mean_days = get_number(stats_obj, "mean_days", stat_where);
        st.std_days = get_number(stats_obj, "std_days", stat_where);
        if (!(st.mean_days > 0.0)) constraint_error(stat_where + ".mean_days", "must be > 0");
        if (!(st.std_days > 0.0)) constraint_error(stat_where + ".std_days", "must be > 0");
        out.emplace(tooth, st);
    }
    return out;
}

SyntheticParams parse_synthetic(const json& obj, const std::string& where) {
    check_keys(obj,
               {"mode", "age_min_years", "age_max_years", "csm_max", "ratio_young",
                "ratio_developed", "width_px_min", "width_px_max", "d_csm_noise_std",
                "d_ratio_noise_std", "d_sigma_noise_std", "mu_noise_days_std",
                "sigma_noise_rel_std", "sigma_spread", "measurement_prob", "prediction_prob",
                "curves", "affine_rule"},
               where);
    SyntheticParams p;
    p.mode = get_string(obj, "mode", where);
    if (p.mode != "curve" && p.mode != "affine") {
        constraint_error(where + ".mode", "must be \"curve\" or \"affine\"");
    }
    p.age_min_years = get_number(obj, "age_min_years", where);
    p.age_max_years = get_number(obj, "age_max_years", where);
    if (!(p.age_min_years > 0.0 && p.age_max_years > p.age_min_years)) {
        constraint_error(where + ".age_min_years", "need 0 < age_min_years < age_max_years");
    }
    p.csm_max = get_number(obj, "csm_max", where);
    p.ratio_young = get_number(obj, "ratio_young", where);
    p.ratio_developed = get_number(obj, "ratio_developed", where);
    p.width_px_min = get_number(obj, "width_px_min", where);
    p.width_px_max = get_number(obj, "width_px_max", where);
    p.d_csm_noise_std = get_number(obj, "d_csm_noise_std", where);
    p.d_ratio_noise_std = get_number(obj, "d_ratio_noise_std", where);
    p.d_sigma_noise_std = get_number(obj, "d_sigma_noise_std", where);
    p.mu_noise_days_std = get_number(obj, "mu_noise_days_std", where);
    p.sigma_noise_rel_std = get_number(obj, "sigma_noise_rel_std", where);
    p.sigma_spread = get_number(obj, "sigma_spread", where);
    p.measurement_prob = get_number(obj, "measurement_prob", where);
    p.prediction_prob = get_number(obj, "prediction_prob", where);
    if (p.measurement_prob < 0.0 || p.measurement_prob > 1.0 || p.prediction_prob < 0.0 ||
        p.prediction_prob > 1.0) {
        constraint_error(where + ".measurement_prob", "probabilities must lie in [0, 1]");
    }
    const json& curves = require(obj, "curves", where);
    if (!curves.is_object()) schema_error(where + ".curves", "expected an object");
    for (const auto& [key, curve_obj] : curves.items()) {
        const std::string curve_where = where + ".curves." + key;
        const ToothId tooth = parse_tooth_key(key, curve_where);
        check_keys(curve_obj, {"onset_years", "completion_years"}, curve_where);
        SynthToothCurve c;
        c.onset_years = get_number(curve_obj, "onset_years", curve_where);
        c.completion_years = get_number(curve_obj, "completion_years", curve_where);
        if (!(c.completion_years > c.onset_years)) {
            constraint_error(curve_where, "completion_years must exceed onset_years");
        }
        p.curves.emplace(tooth, c);
    }
    const json& rule = require(obj, "affine_rule", where);
    check_keys(rule, {"intercept", "w_sex", "w_ratio", "w_mu_years", "ratio_min", "ratio_max"},
               where + ".affine_rule");
    p.affine_rule.intercept = get_number(rule, "intercept", where + ".affine_rule");
    p.affine_rule.w_sex = get_number(rule, "w_sex", where + ".affine_rule");
    p.affine_rule.w_ratio = get_number(rule, "w_ratio", where + ".affine_rule");
    p.affine_rule.w_mu_years = get_number(rule, "w_mu_years", where + ".affine_rule");
    p.affine_rule.ratio_min = get_number(rule, "ratio_min", where + ".affine_rule");
    p.affine_rule.ratio_max = get_number(rule, "ratio_max", where + ".affine_rule");
    if (!(p.affine_rule.ratio_max > p.affine_rule.ratio_min)) {
        constraint_error(where + ".affine_rule.ratio_max", "must exceed ratio_min");
    }
    return p;
}

json synthetic_to_json(const SyntheticParams& p) {
    json curves = json::object();
    for (const auto& [tooth, c] : p.curves) {
        curves[tooth.str()] =
            json{{"onset_years", c.onset_years}, {"completion_years", c.completion_years}};
    }
    return json{{"mode", p.mode},
                {"age_min_years", p.age_min_years},
                {"age_max_years", p.age_max_years},
                {"csm_max", p.csm_max},
                {"ratio_young", p.ratio_young},
                {"ratio_developed", p.ratio_developed},
                {"width_px_min", p.width_px_min},
                {"width_px_max", p.width_px_max},
                {"d_csm_noise_std", p.d_csm_noise_std},
                {"d_ratio_noise_std", p.d_ratio_noise_std},
                {"d_sigma_noise_std", p.d_sigma_noise_std},
                {"mu_noise_days_std", p.mu_noise_days_std},
                {"sigma_noise_rel_std", p.sigma_noise_rel_std},
                {"sigma_spread", p.sigma_spread},
                {"measurement_prob", p.measurement_prob},
                {"prediction_prob", p.prediction_prob},
                {"curves", std::move(curves)},
                {"affine_rule", json{{"intercept", p.affine_rule.intercept},
                                     {"w_sex", p.affine_rule.w_sex},
                                     {"w_ratio", p.affine_rule.w_ratio},
                                     {"w_mu_years", p.affine_rule.w_mu_years},
                                     {"ratio_min", p.affine_rule.ratio_min},
                                     {"ratio_max", p.affine_rule.ratio_max}}}};
}

template <typename Leaf, typename ParseLeaf>
auto parse_string_tree(const json& obj, const std::string& where, ParseLeaf&& leaf)
    -> std::map<std::string, Leaf> {
    if (!obj.is_object()) schema_error(where, "expected an object");
    std::map<std::string, Leaf> out;
    for (const auto& [key, value] : obj.items()) {
        out.emplace(key, leaf(value, where + "." + key));
    }
    return out;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error::io("store", "FILE_NOT_FOUND", "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error::io("store", "WRITE_FAILED", "cannot write " + path);
    out << content;
    if (!out) throw Error::io("store", "WRITE_FAILED", "short write to " + path);
}

std::vector<PatientRecord> parse_patients(const std::string& json_text) {
    const json doc = parse_document(json_text);
    if (!doc.is_array()) {
        throw Error::parse("store", "SCHEMA_VIOLATION", "top level must be a list of patients");
    }
    std::vector<PatientRecord> out;
    out.reserve(doc.size());
    std::size_t index = 0;
    for (const json& obj : doc) {
        out.push_back(parse_patient(obj, "patients[" + std::to_string(index) + "]"));
        ++index;
    }
    return out;
}

PatientStore load_patients_from_string(const std::string& json_text, std::string source_path) {
    std::vector<PatientRecord> records = parse_patients(json_text);
    PatientStore store;
    store.source_path = std::move(source_path);
    std::string violations_text;
    for (PatientRecord& rec : records) {
        for (const Violation& v : validate_record(rec)) {
            violations_text += "\n  " + rec.id + ": " + v.code +
                               (v.tooth ? " tooth " + v.tooth->str() : "") + " (" + v.detail + ")";
        }
        const auto [it, inserted] = store.records.emplace(rec.id, std::move(rec));
        if (!inserted) {
            throw Error::parse("store", "DUPLICATE_ID", "duplicate patient id '" + it->first + "'");
        }
    }
    if (!violations_text.empty()) {
        throw Error::parse("store", "VALIDATION_FAILED",
                           "records violate invariants:" + violations_text);
    }
    return store;
}

PatientStore load_patients(const std::string& path) {
    return load_patients_from_string(read_file(path), path);
}

std::string serialize_patients(std::span<const PatientRecord> records) {
    json doc = json::array();
    for (const PatientRecord& rec : records) doc.push_back(patient_to_json(rec));
    return doc.dump(2) + "\n";
}

void save_patients(std::span<const PatientRecord> records, const std::string& path) {
    write_file(path, serialize_patients(records));
}

Coefficients parse_coefficients(const std::string& json_text) {
    const json doc = parse_document(json_text);
    check_keys(doc,
               {"cameriere", "aggregation", "clustering", "population_stats", "quantifiers",
                "reliability_labels", "age_bands", "lexicons", "templates", "words", "disclaimer",
                "synthetic"},
               "coefficients");
    Coefficients c;

    const json& cam = require(doc, "cameriere", "coefficients");
    check_keys(cam, {"intercept", "coef_g", "coef_csm45", "coef_n0", "coef_s", "coef_s_n0"},
               "cameriere");
    c.cameriere.intercept = get_number(cam, "intercept", "cameriere");
    c.cameriere.coef_g = get_number(cam, "coef_g", "cameriere");
    c.cameriere.coef_csm45 = get_number(cam, "coef_csm45", "cameriere");
    c.cameriere.coef_n0 = get_number(cam, "coef_n0", "cameriere");
    c.cameriere.coef_s = get_number(cam, "coef_s", "cameriere");
    c.cameriere.coef_s_n0 = get_number(cam, "coef_s_n0", "cameriere");

    const json& agg = require(doc, "aggregation", "coefficients");
    check_keys(agg, {"penalty_p"}, "aggregation");
    c.penalty_p = get_number(agg, "penalty_p", "aggregation");
    if (!(c.penalty_p > 0.0)) constraint_error("aggregation.penalty_p", "must be > 0");

    const json& clu = require(doc, "clustering", "coefficients");
    check_keys(clu, {"eps_years"}, "clustering");
    c.dbscan_eps_years = get_number(clu, "eps_years", "clustering");
    if (!(c.dbscan_eps_years > 0.0)) constraint_error("clustering.eps_years", "must be > 0");

    c.population_stats =
        parse_population_stats(require(doc, "population_stats", "coefficients"), "population_stats");

    const json& quant = require(doc, "quantifiers", "coefficients");
    check_keys(quant, {"active", "definitions"}, "quantifiers");
    c.quantifiers.active = get_string(quant, "active", "quantifiers");
    const json& defs = require(quant, "definitions", "quantifiers");
    if (!defs.is_object()) schema_error("quantifiers.definitions", "expected an object");
    for (const auto& [key, def] : defs.items()) {
        c.quantifiers.definitions.emplace(key,
                                          parse_membership(def, "quantifiers.definitions." + key));
    }
    if (!c.quantifiers.definitions.count(c.quantifiers.active)) {
        constraint_error("quantifiers.active",
                         "quantifier '" + c.quantifiers.active + "' is not defined");
    }

    const json& labels = require(doc, "reliability_labels", "coefficients");
    check_keys(labels, {"low_below", "high_above"}, "reliability_labels");
    c.reliability_labels.low_below = get_number(labels, "low_below", "reliability_labels");
    c.reliability_labels.high_above = get_number(labels, "high_above", "reliability_labels");
    if (c.reliability_labels.low_below < 0.0 || c.reliability_labels.high_above > 1.0 ||
        c.reliability_labels.low_below > c.reliability_labels.high_above) {
        constraint_error("reliability_labels", "need 0 <= low_below <= high_above <= 1");
    }

    const json& bands = require(doc, "age_bands", "coefficients");
    check_keys(bands,
               {"mixed_dentition_from_years", "permanent_dentition_from_years",
                "adolescent_from_years", "adult_from_years"},
               "age_bands");
    c.age_bands.mixed_dentition_from_years =
        get_number(bands, "mixed_dentition_from_years", "age_bands");
    c.age_bands.permanent_dentition_from_years =
        get_number(bands, "permanent_dentition_from_years", "age_bands");
    c.age_bands.adolescent_from_years = get_number(bands, "adolescent_from_years", "age_bands");
    c.age_bands.adult_from_years = get_number(bands, "adult_from_years", "age_bands");
    if (!(c.age_bands.mixed_dentition_from_years <= c.age_bands.permanent_dentition_from_years) ||
        !(c.age_bands.adolescent_from_years <= c.age_bands.adult_from_years)) {
        constraint_error("age_bands", "band thresholds must be non-decreasing");
    }

    const json& lex = require(doc, "lexicons", "coefficients");
    check_keys(lex, {"count", "apex"}, "lexicons");
    c.count_lexicon = parse_lexicon(require(lex, "count", "lexicons"), "lexicons.count");
    c.apex_lexicon = parse_lexicon(require(lex, "apex", "lexicons"), "lexicons.apex");

    c.templates = parse_string_tree<std::map<std::string, std::string>>(
        require(doc, "templates", "coefficients"), "templates",
        [](const json& lang_obj, const std::string& where) {
            return parse_string_tree<std::string>(
                lang_obj, where, [](const json& v, const std::string& leaf_where) {
                    if (!v.is_string()) schema_error(leaf_where, "expected a string");
                    return v.get<std::string>();
                });
        });

    c.words = parse_string_tree<std::map<std::string, std::map<std::string, std::string>>>(
        require(doc, "words", "coefficients"), "words",
        [](const json& lang_obj, const std::string& lang_where) {
            return parse_string_tree<std::map<std::string, std::string>>(
                lang_obj, lang_where, [](const json& group_obj, const std::string& group_where) {
                    return parse_string_tree<std::string>(
                        group_obj, group_where, [](const json& v, const std::string& leaf_where) {
                            if (!v.is_string()) schema_error(leaf_where, "expected a string");
                            return v.get<std::string>();
                        });
                });
        });

    c.disclaimer = parse_string_tree<std::string>(
        require(doc, "disclaimer", "coefficients"), "disclaimer",
        [](const json& v, const std::string& where) {
            if (!v.is_string()) schema_error(where, "expected a string");
            return v.get<std::string>();
        });

    for (const char* lang : {"en", "es"}) {
        if (!c.templates.count(lang)) constraint_error("templates", std::string("missing language '") + lang + "'");
        if (!c.words.count(lang)) constraint_error("words", std::string("missing language '") + lang + "'");
        if (!c.disclaimer.count(lang) || c.disclaimer.at(lang).empty()) {
            constraint_error("disclaimer", std::string("missing language '") + lang + "'");
        }
    }

    c.synthetic = parse_synthetic(require(doc, "synthetic", "coefficients"), "synthetic");
    return c;
}

Coefficients load_coefficients(const std::string& path) {
    return parse_coefficients(read_file(path));
}

std::string serialize_coefficients(const Coefficients& c) {
    json stats = json::object();
    for (const auto& [tooth, st] : c.population_stats) {
        stats[tooth.str()] = json{{"mean_days", st.mean_days}, {"std_days", st.std_days}};
    }
    json quantifier_defs = json::object();
    for (const auto& [name, def] : c.quantifiers.definitions) {
        quantifier_defs[name] = membership_to_json(def);
    }
    auto lexicon_to_json = [](const FuzzyLexicon& lex) {
        json memberships = json::object();
        for (const auto& [label, m] : lex.memberships) memberships[label] = membership_to_json(m);
        return json{{"labels", lex.labels}, {"memberships", std::move(memberships)}};
    };
    const json doc{
        {"cameriere", json{{"intercept", c.cameriere.intercept},
                           {"coef_g", c.cameriere.coef_g},
                           {"coef_csm45", c.cameriere.coef_csm45},
                           {"coef_n0", c.cameriere.coef_n0},
                           {"coef_s", c.cameriere.coef_s},
                           {"coef_s_n0", c.cameriere.coef_s_n0}}},
        {"aggregation", json{{"penalty_p", c.penalty_p}}},
        {"clustering", json{{"eps_years", c.dbscan_eps_years}}},
        {"population_stats", std::move(stats)},
        {"quantifiers", json{{"active", c.quantifiers.active}, {"definitions", quantifier_defs}}},
        {"reliability_labels", json{{"low_below", c.reliability_labels.low_below},
                                    {"high_above", c.reliability_labels.high_above}}},
        {"age_bands",
         json{{"mixed_dentition_from_years", c.age_bands.mixed_dentition_from_years},
              {"permanent_dentition_from_years", c.age_bands.permanent_dentition_from_years},
              {"adolescent_from_years", c.age_bands.adolescent_from_years},
              {"adult_from_years", c.age_bands.adult_from_years}}},
        {"lexicons",
         json{{"count", lexicon_to_json(c.count_lexicon)}, {"apex", lexicon_to_json(c.apex_lexicon)}}},
        {"templates", c.templates},
        {"words", c.words},
        {"disclaimer", c.disclaimer},
        {"synthetic", synthetic_to_json(c.synthetic)}};
    return doc.dump(2) + "\n";
}

void save_coefficients(const Coefficients& c, const std::string& path) {
    write_file(path, serialize_coefficients(c));
}

}  // namespace dentage
