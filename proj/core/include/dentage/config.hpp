#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dentage/fdi.hpp"

namespace dentage {

enum class Language { en, es };
enum class ReportKind { brief, detailed };  // "short" is a keyword-ish name; file value is "short"

std::string to_string(Language lang);
Language language_from_string(const std::string& s);  // UNSUPPORTED_LANGUAGE
std::string to_string(ReportKind kind);
ReportKind report_kind_from_string(const std::string& s);  // UNSUPPORTED_DETAIL

// Piecewise-linear function on the reals given by ascending (x, y) knots.
// Outside the knot range the value is 0 unless the corresponding clamp flag
// holds the boundary y. A single knot acts as a point (Dirac) membership.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;
    PiecewiseLinear(std::vector<std::pair<double, double>> points, bool clamp_left = false,
                    bool clamp_right = false);

    double operator()(double x) const;

    const std::vector<std::pair<double, double>>& points() const { return points_; }
    bool clamp_left() const { return clamp_left_; }
    bool clamp_right() const { return clamp_right_; }

private:
    std::vector<std::pair<double, double>> points_;
    bool clamp_left_ = false;
    bool clamp_right_ = false;
};

// Transparent linear model coefficients (population-adjustable).
struct CameriereCoefficients {
    double intercept = 0.0;
    double coef_g = 0.0;
    double coef_csm45 = 0.0;
    double coef_n0 = 0.0;
    double coef_s = 0.0;
    double coef_s_n0 = 0.0;
};

struct ToothStats {
    double mean_days = 0.0;
    double std_days = 0.0;
};

// Relative quantifier bank; `active` names the one used for aggregation.
struct QuantifierConfig {
    std::string active;
    std::map<std::string, PiecewiseLinear> definitions;

    const PiecewiseLinear& active_quantifier() const;
};

// Aggregate-reliability label cutpoints; boundaries belong to "normal".
struct ReliabilityCutpoints {
    double low_below = 0.0;   // label "low" strictly below this
    double high_above = 1.0;  // label "high" strictly above this
};

struct AgeBands {
    double mixed_dentition_from_years = 6.0;
    double permanent_dentition_from_years = 12.0;
    double adolescent_from_years = 12.0;
    double adult_from_years = 18.0;
};

// Ordered linguistic labels with membership functions over a numeric scale.
struct FuzzyLexicon {
    std::vector<std::string> labels;  // from the most-closed/lowest to the highest
    std::map<std::string, PiecewiseLinear> memberships;
};

// Synthetic-cohort generator knobs. Development curves are artifact plumbing,
// not claims about human dentition.
struct SynthToothCurve {
    double onset_years = 0.0;       // mineralization begins
    double completion_years = 1.0;  // root calcification completes
};

struct SyntheticAffineRule {
    double intercept = 0.0;
    double w_sex = 0.0;
    double w_ratio = 0.0;
    double w_mu_years = 0.0;
    double ratio_min = 1.0;
    double ratio_max = 2.0;
};

struct SyntheticParams {
    std::string mode = "curve";  // "curve" | "affine"
    double age_min_years = 5.0;
    double age_max_years = 16.0;
    double csm_max = 0.4;
    double ratio_young = 2.2;
    double ratio_developed = 1.0;
    double width_px_min = 140.0;
    double width_px_max = 260.0;
    double d_csm_noise_std = 0.03;
    double d_ratio_noise_std = 0.03;
    double d_sigma_noise_std = 0.05;
    double mu_noise_days_std = 60.0;
    double sigma_noise_rel_std = 0.15;
    double sigma_spread = 0.9;
    double measurement_prob = 0.95;
    double prediction_prob = 0.92;
    std::map<ToothId, SynthToothCurve> curves;
    SyntheticAffineRule affine_rule;
};

// Everything the engine reads from the coefficients-and-constants file:
// estimation constants, fuzzy machinery, age bands, NLG lexicons/templates,
// the disclaimer, and synthetic-cohort parameters.
struct Coefficients {
    CameriereCoefficients cameriere;
    double penalty_p = 1.0;
    double dbscan_eps_years = 0.03;
    std::map<ToothId, ToothStats> population_stats;
    QuantifierConfig quantifiers;
    ReliabilityCutpoints reliability_labels;
    AgeBands age_bands;
    FuzzyLexicon count_lexicon;
    FuzzyLexicon apex_lexicon;
    // language -> rule id -> sentence template with {slot} placeholders
    std::map<std::string, std::map<std::string, std::string>> templates;
    // language -> word group -> key -> surface form
    std::map<std::string, std::map<std::string, std::map<std::string, std::string>>> words;
    std::map<std::string, std::string> disclaimer;  // language -> sentence
    SyntheticParams synthetic;
};

// Shipped defaults (embedded copy of data/default_coefficients.json).
const Coefficients& default_coefficients();
const std::string& default_coefficients_json();

}  // namespace dentage
