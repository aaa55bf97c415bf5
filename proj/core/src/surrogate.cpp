#include "dentage/surrogate.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "dentage/age_units.hpp"
#include "dentage/errors.hpp"

namespace dentage {

namespace {

struct Sample {
    double g, ratio, mu_years, csm;
};

std::vector<Sample> complete_samples(std::span<const PatientRecord> cohort, ToothId target) {
    std::vector<Sample> out;
    for (const PatientRecord& r : cohort) {
        const auto m = r.measurements.find(target);
        const auto p = r.predictions.find(target);
        if (m == r.measurements.end() || p == r.predictions.end()) continue;
        out.push_back({sex_score(r.sex), m->second.ratio, days_to_years(p->second.mu_days),
                       m->second.csm});
    }
    return out;
}

// Gaussian elimination with partial pivoting on the 4x4 normal equations.
std::array<double, 4> solve_normal_equations(std::array<std::array<double, 4>, 4> gram,
                                             std::array<double, 4> rhs) {
    double scale = 0.0;
    for (const auto& row : gram) {
        for (double v : row) scale = std::max(scale, std::abs(v));
    }
    const double tol = 1e-10 * scale;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r) {
            if (std::abs(gram[r][col]) > std::abs(gram[pivot][col])) pivot = r;
        }
        if (std::abs(gram[pivot][col]) <= tol) {
            throw Error::domain("surrogate", "SINGULAR_DESIGN",
                                "design matrix is rank deficient (pivot below tolerance)");
        }
        std::swap(gram[col], gram[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int r = col + 1; r < 4; ++r) {
            const double f = gram[r][col] / gram[col][col];
            for (int c = col; c < 4; ++c) gram[r][c] -= f * gram[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::array<double, 4> x{};
    for (int r = 3; r >= 0; --r) {
        double acc = rhs[r];
        for (int c = r + 1; c < 4; ++c) acc -= gram[r][c] * x[c];
        x[r] = acc / gram[r][r];
    }
    return x;
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error::domain("surrogate", "LENGTH_MISMATCH",
                            "series lengths differ: " + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
    }
    const std::size_t n = x.size();
    if (n < 2) {
        throw Error::domain("surrogate", "TOO_FEW_SAMPLES", "pearson needs at least two points");
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw Error::domain("surrogate", "DEGENERATE_SERIES",
                            "a series with zero variance has no correlation");
    }
    return sxy / std::sqrt(sxx * syy);
}

std::map<ToothId, ToothCorrelations> correlation_table(std::span<const PatientRecord> cohort) {
    std::map<ToothId, ToothCorrelations> out;
    for (int i = 0; i < kPosteriorMandibularCount; ++i) {
        const ToothId tooth = posterior_mandibular_teeth()[i];
        std::vector<double> ratio, csm, mu, sigma;
        for (const PatientRecord& r : cohort) {
            const auto m = r.measurements.find(tooth);
            const auto p = r.predictions.find(tooth);
            if (m == r.measurements.end() || p == r.predictions.end()) continue;
            ratio.push_back(m->second.ratio);
            csm.push_back(m->second.csm);
            mu.push_back(p->second.mu_days);
            sigma.push_back(p->second.sigma_days);
        }
        auto cell = [&](const std::vector<double>& a, const std::vector<double>& b) {
            CorrelationCell c;
            if (a.size() < 2) {
                c.absent_reason = "TOO_FEW_SAMPLES";
                return c;
            }
            try {
                c.value = pearson(a, b);
            } catch (const Error& e) {
                c.absent_reason = e.code();
            }
            return c;
        };
        ToothCorrelations tc;
        tc.ratio_vs_mu = cell(ratio, mu);
        tc.ratio_vs_sigma = cell(ratio, sigma);
        tc.csm_vs_mu = cell(csm, mu);
        tc.csm_vs_sigma = cell(csm, sigma);
        out.emplace(tooth, std::move(tc));
    }
    return out;
}

RegressionModel fit_surrogate(std::span<const PatientRecord> cohort, ToothId target_tooth) {
    const std::vector<Sample> samples = complete_samples(cohort, target_tooth);
    if (samples.size() < 4) {
        throw Error::domain("surrogate", "TOO_FEW_SAMPLES",
                            "need at least 4 complete samples for tooth " + target_tooth.str() +
                                ", have " + std::to_string(samples.size()));
    }
    std::array<std::array<double, 4>, 4> gram{};
    std::array<double, 4> rhs{};
    for (const Sample& s : samples) {
        const std::array<double, 4> row{1.0, s.g, s.ratio, s.mu_years};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) gram[i][j] += row[i] * row[j];
            rhs[i] += row[i] * s.csm;
        }
    }
    const std::array<double, 4> w = solve_normal_equations(gram, rhs);
    RegressionModel model;
    model.intercept = w[0];
    model.w_sex = w[1];
    model.w_ratio = w[2];
    model.w_mu = w[3];
    model.target_tooth = target_tooth;
    model.fitted_on = std::to_string(samples.size()) + " samples";
    return model;
}

MetricsReport evaluate_regressor(const RegressionModel& model,
                                 std::span<const PatientRecord> cohort) {
    const std::vector<Sample> samples = complete_samples(cohort, model.target_tooth);
    const std::size_t n = samples.size();
    if (n < 2) {
        throw Error::domain("surrogate", "TOO_FEW_SAMPLES",
                            "need at least 2 evaluable samples, have " + std::to_string(n));
    }
    std::vector<double> y(n), yhat(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = samples[i].csm;
        yhat[i] = model.predict(samples[i].g, samples[i].ratio, samples[i].mu_years);
    }
    double y_mean = 0.0, e_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        y_mean += y[i];
        e_mean += y[i] - yhat[i];
    }
    y_mean /= static_cast<double>(n);
    e_mean /= static_cast<double>(n);

    MetricsReport r;
    double ss_res = 0.0, ss_tot = 0.0, var_e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - yhat[i];
        ss_res += e * e;
        ss_tot += (y[i] - y_mean) * (y[i] - y_mean);
        var_e += (e - e_mean) * (e - e_mean);
        r.mean_absolute_error += std::abs(e);
        r.max_error = std::max(r.max_error, std::abs(e));
    }
    if (ss_tot == 0.0) {
        throw Error::domain("surrogate", "DEGENERATE_SERIES", "target variance is zero");
    }
    r.mean_squared_error = ss_res / static_cast<double>(n);
    r.signed_mean_error = e_mean;
    r.mean_error = std::abs(e_mean);
    r.mean_absolute_error /= static_cast<double>(n);
    r.r2 = 1.0 - ss_res / ss_tot;
    r.explained_variance = 1.0 - var_e / ss_tot;
    try {
        r.pearson = pearson(y, yhat);
    } catch (const Error&) {
        r.pearson = std::numeric_limits<double>::quiet_NaN();  // constant predictor
    }
    return r;
}

}  // namespace dentage
