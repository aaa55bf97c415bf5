#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dentage/config.hpp"
#include "dentage/records.hpp"

namespace dentage {

// Sample Pearson correlation; requires two equal-length series of at least
// two points with nonzero variance.
double pearson(std::span<const double> x, std::span<const double> y);

// One correlation cell; `absent_reason` explains a missing value
// (TOO_FEW_SAMPLES or DEGENERATE_SERIES).
struct CorrelationCell {
    std::optional<double> value;
    std::string absent_reason;
};

struct ToothCorrelations {
    CorrelationCell ratio_vs_mu;
    CorrelationCell ratio_vs_sigma;
    CorrelationCell csm_vs_mu;
    CorrelationCell csm_vs_sigma;
};

// Per-tooth correlations between manual measurements (ratio, CSM) and opaque
// outputs (mu, sigma), over patients carrying both for that tooth.
std::map<ToothId, ToothCorrelations> correlation_table(std::span<const PatientRecord> cohort);

// Transparent surrogate: CSM of the target tooth as an affine function of
// sex, ratio and the opaque point estimate (in years).
struct RegressionModel {
    double intercept = 0.0;
    double w_sex = 0.0;
    double w_ratio = 0.0;
    double w_mu = 0.0;  // per year of opaque estimate
    ToothId target_tooth{45};
    std::string fitted_on;  // cohort descriptor

    double predict(double g, double ratio, double mu_years) const {
        return intercept + w_sex * g + w_ratio * ratio + w_mu * mu_years;
    }
};

// Ordinary least squares via the normal equations with a rank guard
// (pivot tolerance 1e-10 relative to the Gram matrix scale).
RegressionModel fit_surrogate(std::span<const PatientRecord> cohort, ToothId target_tooth);

struct MetricsReport {
    double explained_variance = 0.0;
    double mean_squared_error = 0.0;
    double mean_error = 0.0;         // |mean(residual)|
    double signed_mean_error = 0.0;  // mean(residual), exposed alongside
    double max_error = 0.0;
    double mean_absolute_error = 0.0;
    double r2 = 0.0;
    double pearson = 0.0;  // NaN when the predictions are constant
};

MetricsReport evaluate_regressor(const RegressionModel& model,
                                 std::span<const PatientRecord> cohort);

}  // namespace dentage
