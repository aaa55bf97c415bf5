#include "dentage/estimate.hpp"

#include <cmath>
#include <limits>

#include "dentage/age_units.hpp"
#include "dentage/errors.hpp"

namespace dentage {

double cameriere_formula(double g, double csm45, double n0, double s,
                         const CameriereCoefficients& c) {
    return c.intercept + c.coef_g * g + c.coef_csm45 * csm45 + c.coef_n0 * n0 + c.coef_s * s +
           c.coef_s_n0 * s * n0;
}

AgeEstimate cameriere_age(Sex sex, const std::map<ToothId, ToothMeasurement>& measurements,
                          const Coefficients& coeffs) {
    double s = 0.0;
    double n0 = 0.0;
    double csm45 = std::numeric_limits<double>::quiet_NaN();
    for (const auto& [tooth, m] : measurements) {
        if (!tooth.right_mandibular() || tooth.position() > 7) continue;
        if (!std::isfinite(m.csm) || m.csm < 0.0) {
            throw Error::domain("estimate", "INVALID_CSM",
                                "tooth " + tooth.str() + " has a non-finite or negative CSM");
        }
        s += m.csm;
        if (m.csm == 0.0) n0 += 1.0;
        if (tooth.position() == 5) csm45 = m.csm;
    }
    if (std::isnan(csm45)) {
        throw Error::domain("estimate", "MISSING_TOOTH_45",
                            "tooth 45 measurement is required by the transparent model");
    }
    const double years = cameriere_formula(sex_score(sex), csm45, n0, s, coeffs.cameriere);
    if (!(years > 0.0)) {
        throw Error::domain("estimate", "NONPOSITIVE_AGE",
                            "transparent model produced a non-positive age: " +
                                std::to_string(years) + " years");
    }
    return AgeEstimate{years_to_days(years), EstimateMethod::cameriere, {}};
}

AgeEstimate aggregate_opaque(const std::map<ToothId, ToothPrediction>& predictions,
                             double penalty_p) {
    if (predictions.empty()) {
        throw Error::domain("estimate", "NO_PREDICTIONS", "cannot aggregate an empty prediction set");
    }
    if (!(penalty_p > 0.0)) {
        throw Error::domain("estimate", "INVALID_PENALTY", "penalty p must be > 0");
    }
    double sigma_min = std::numeric_limits<double>::infinity();
    for (const auto& [tooth, p] : predictions) {
        if (!(p.sigma_days > 0.0)) {
            throw Error::domain("estimate", "NONPOSITIVE_SIGMA",
                                "tooth " + tooth.str() + " has sigma <= 0");
        }
        sigma_min = std::min(sigma_min, p.sigma_days);
    }
    // Normalizing by the smallest sigma keeps the unnormalized weights in
    // (0, 1] for any p, which also makes the weights exactly scale-invariant.
    AgeEstimate out;
    out.method = EstimateMethod::opaque_aggregate;
    double total = 0.0;
    for (const auto& [tooth, p] : predictions) {
        const double r = sigma_min / p.sigma_days;
        const double w = std::pow(r * r, penalty_p);
        out.per_tooth_weights.emplace(tooth, w);
        total += w;
    }
    double estimate = 0.0;
    for (auto& [tooth, w] : out.per_tooth_weights) {
        w /= total;
        estimate += predictions.at(tooth).mu_days * w;
    }
    out.age_days = estimate;
    return out;
}

ErrorClassification classify_error(double age_real_days, double age_opaque_days) {
    if (!(age_real_days > 0.0)) {
        throw Error::domain("estimate", "INVALID_AGE", "real age must be > 0 days");
    }
    ErrorClassification out;
    out.error_percent = std::abs((age_real_days - age_opaque_days) / age_real_days) * 100.0;
    out.magnitude_days = std::abs(age_real_days - age_opaque_days);
    if (out.error_percent > 1.0) {
        out.direction = age_opaque_days > age_real_days ? ErrorDirection::overestimation
                                                        : ErrorDirection::underestimation;
    } else {
        out.direction = ErrorDirection::accurate;
    }
    return out;
}

}  // namespace dentage
