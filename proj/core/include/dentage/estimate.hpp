#pragma once

#include <map>

#include "dentage/config.hpp"
#include "dentage/records.hpp"

namespace dentage {

enum class EstimateMethod { cameriere, opaque_aggregate };

struct AgeEstimate {
    double age_days = 0.0;
    EstimateMethod method = EstimateMethod::opaque_aggregate;
    // Present only for opaque_aggregate; weights are positive and sum to 1.
    std::map<ToothId, double> per_tooth_weights;
};

enum class ErrorDirection { overestimation, underestimation, accurate };

struct ErrorClassification {
    double error_percent = 0.0;   // |(real - opaque) / real| * 100
    ErrorDirection direction = ErrorDirection::accurate;
    double magnitude_days = 0.0;  // |real - opaque|
};

// The transparent linear model on raw regressors, in years:
//   age = intercept + coef_g*g + coef_csm45*csm45 + coef_n0*n0 + coef_s*s + coef_s_n0*s*n0
// (N0 enters linearly; see the shipped defaults for the reference constants).
double cameriere_formula(double g, double csm45, double n0, double s,
                         const CameriereCoefficients& c);

// Evaluates the transparent model from right-quadrant measurements: s sums
// CSM over provided quadrant-4 teeth at positions 1..7, n0 counts those with
// csm == 0, csm45 is tooth 45's value (MISSING_TOOTH_45 when absent). Teeth
// not provided contribute nothing. Result is converted to days.
AgeEstimate cameriere_age(Sex sex, const std::map<ToothId, ToothMeasurement>& measurements,
                          const Coefficients& coeffs);

// Uncertainty-weighted aggregation of per-tooth opaque predictions:
//   w_t = (1/(sigma_t^2)^p) / sum_u (1/(sigma_u^2)^p),   y = sum_t mu_t * w_t
// p > 0 increases the penalty on uncertain teeth.
AgeEstimate aggregate_opaque(const std::map<ToothId, ToothPrediction>& predictions, double penalty_p);

// Relative error between real and opaque-estimated age; "accurate" up to and
// including 1%, directional strictly above it.
ErrorClassification classify_error(double age_real_days, double age_opaque_days);

}  // namespace dentage
