#include "dentage/cohort.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "dentage/age_units.hpp"
#include "dentage/errors.hpp"

namespace dentage {

namespace {

// mt19937_64 is fully specified by the standard, and the double extraction
// below avoids std::uniform_real_distribution, whose output is
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

std::string patient_id(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "p%03d", index);
    return buf;
}

ToothMeasurement make_measurement(ToothId tooth, double csm_target, double ratio_target,
                                  double width_px) {
    ToothMeasurement m;
    m.width_px = width_px;
    m.height_px = ratio_target * width_px;
    m.ratio = m.height_px / m.width_px;  // restate so the stored value is the exact quotient
    const double aperture = csm_target * m.height_px;
    if (tooth.molar()) {
        m.came1_px = 0.6 * aperture;
        m.came2_px = aperture - m.came1_px;
    } else {
        m.came1_px = aperture;
    }
    m.csm = (m.came1_px + m.came2_px.value_or(0.0)) / m.height_px;
    return m;
}

}  // namespace

SyntheticCohort generate_cohort(int n, std::uint64_t seed, const SyntheticParams& params,
                                const std::map<ToothId, ToothStats>& sigma_anchors) {
    if (n < 1) {
        throw Error::domain("surrogate", "INVALID_COHORT_SIZE", "cohort size must be >= 1");
    }
    const bool affine = params.mode == "affine";
    Rng rng(seed);

    SyntheticCohort cohort;
    cohort.seed = seed;
    cohort.ground_truth = params;
    cohort.records.reserve(static_cast<std::size_t>(n));

    for (int i = 1; i <= n; ++i) {
        PatientRecord rec;
        rec.id = patient_id(i);
        const double age_years = rng.uniform(params.age_min_years, params.age_max_years);
        rec.age_days = std::max<long long>(1, std::llround(years_to_days(age_years)));
        rec.sex = rng.uniform01() < 0.5 ? Sex::female : Sex::male;
        rec.opg_path = "opg/" + rec.id + ".png";
        rec.heatmap_path = "heatmaps/" + rec.id + ".png";

        for (int t = 0; t < kPosteriorMandibularCount; ++t) {
            const ToothId tooth = posterior_mandibular_teeth()[t];
            const auto curve_it = params.curves.find(tooth);
            if (curve_it == params.curves.end()) {
                throw Error::domain("surrogate", "MISSING_CURVE",
                                    "no development curve for tooth " + tooth.str());
            }
            const auto anchor_it = sigma_anchors.find(tooth);
            if (anchor_it == sigma_anchors.end()) {
                throw Error::domain("surrogate", "MISSING_SIGMA_ANCHOR",
                                    "no uncertainty anchor for tooth " + tooth.str());
            }
            const SynthToothCurve& curve = curve_it->second;
            const double d =
                (age_years - curve.onset_years) / (curve.completion_years - curve.onset_years);

            // Fixed draw schedule per tooth keeps the stream stable across modes.
            const bool has_measurement = rng.uniform01() < params.measurement_prob;
            const bool has_prediction = rng.uniform01() < params.prediction_prob;
            const double eps_csm = rng.normal();
            const double eps_ratio = rng.normal();
            const double eps_sigma_pos = rng.normal();
            const double eps_sigma = rng.normal();
            const double eps_mu = rng.normal();
            const double width_px = rng.uniform(params.width_px_min, params.width_px_max);
            const double ratio_uniform = rng.uniform01();

            double csm_target, ratio_target, mu_days;
            if (affine) {
                const SyntheticAffineRule& rule = params.affine_rule;
                ratio_target = rule.ratio_min + (rule.ratio_max - rule.ratio_min) * ratio_uniform;
                mu_days = static_cast<double>(rec.age_days);
                csm_target = std::max(
                    0.0, rule.intercept + rule.w_sex * sex_score(rec.sex) +
                             rule.w_ratio * ratio_target + rule.w_mu_years * days_to_years(mu_days));
            } else {
                const double d_csm = clamp01(d + params.d_csm_noise_std * eps_csm);
                const double d_ratio = clamp01(d + params.d_ratio_noise_std * eps_ratio);
                csm_target = params.csm_max * (1.0 - d_csm);
                ratio_target = params.ratio_developed +
                               (params.ratio_young - params.ratio_developed) * (1.0 - d_ratio);
                mu_days = std::max(
                    1.0, static_cast<double>(rec.age_days) + params.mu_noise_days_std * eps_mu);
            }

            if (has_measurement) {
                rec.measurements.emplace(tooth,
                                         make_measurement(tooth, csm_target, ratio_target, width_px));
            }
            if (has_prediction) {
                // Uncertainty grows as development completes: closed apices
                // carry less age signal.
                const double d_sigma = clamp01(d + params.d_sigma_noise_std * eps_sigma_pos);
                const ToothStats& anchor = anchor_it->second;
                ToothPrediction p;
                p.mu_days = mu_days;
                p.sigma_days = std::max(
                    30.0, anchor.mean_days +
                              anchor.std_days * (params.sigma_spread * (2.0 * d_sigma - 1.0) +
                                                 params.sigma_noise_rel_std * eps_sigma));
                rec.predictions.emplace(tooth, p);
            }
        }
        cohort.records.push_back(std::move(rec));
    }
    return cohort;
}

}  // namespace dentage
