// Independent oracles for the test suites. These deliberately re-derive
// results through different routes than the library (naive formulas,
// sorted-gap partitioning, streaming accumulation) and must stay decoupled
// from the implementation paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "dentage/config.hpp"

namespace oracles {

// Direct evaluation of the transparent age formula, term by term.
inline double cameriere_direct(double g, double csm45, double n0, double s,
                               const dentage::CameriereCoefficients& c) {
    double age = c.intercept;
    age += c.coef_g * g;
    age += c.coef_csm45 * csm45;
    age += c.coef_n0 * n0;
    age += c.coef_s * s;
    age += c.coef_s_n0 * (s * n0);
    return age;
}

// Unnormalized inverse-variance weights, the naive route.
inline std::vector<double> aggregation_weights_direct(const std::vector<double>& sigmas, double p) {
    std::vector<double> w(sigmas.size());
    double total = 0.0;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        w[i] = 1.0 / std::pow(sigmas[i] * sigmas[i], p);
        total += w[i];
    }
    for (double& v : w) v /= total;
    return w;
}

// Whole years by repeated subtraction, then whole months the same way.
inline std::pair<int, int> years_months_direct(double days) {
    int years = 0;
    double rest = days;
    while (rest >= 365.25) {
        rest -= 365.25;
        ++years;
    }
    int months = 0;
    while (rest >= 30.4375 && months < 11) {
        rest -= 30.4375;
        ++months;
    }
    return {years, months};
}

// Brute-force sorted-gap partition: sort values, split where the gap to the
// previous value exceeds eps. Returns groups of input indices, groups ordered
// by their smallest value, members by (value, index).
inline std::vector<std::vector<std::size_t>> gap_partition(const std::vector<double>& values,
                                                           double eps) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] < values[b];
        return a < b;
    });
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k == 0 || values[order[k]] - values[order[k - 1]] > eps) groups.emplace_back();
        groups.back().push_back(order[k]);
    }
    return groups;
}

// Streaming (single-pass) recomputation of the regression metrics from raw
// (y, yhat) pairs.
struct StreamedMetrics {
    double explained_variance = 0.0;
    double mean_squared_error = 0.0;
    double mean_error = 0.0;
    double max_error = 0.0;
    double mean_absolute_error = 0.0;
    double r2 = 0.0;
    double pearson = 0.0;
};

inline StreamedMetrics stream_metrics(const std::vector<double>& y,
                                      const std::vector<double>& yhat) {
    const double n = static_cast<double>(y.size());
    double sy = 0, syy = 0, sp = 0, spp = 0, syp = 0, se = 0, see = 0, sae = 0, maxe = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double e = y[i] - yhat[i];
        sy += y[i];
        syy += y[i] * y[i];
        sp += yhat[i];
        spp += yhat[i] * yhat[i];
        syp += y[i] * yhat[i];
        se += e;
        see += e * e;
        sae += std::abs(e);
        maxe = std::max(maxe, std::abs(e));
    }
    StreamedMetrics m;
    const double var_y = syy / n - (sy / n) * (sy / n);
    const double var_p = spp / n - (sp / n) * (sp / n);
    const double var_e = see / n - (se / n) * (se / n);
    const double cov = syp / n - (sy / n) * (sp / n);
    m.mean_squared_error = see / n;
    m.mean_error = std::abs(se / n);
    m.mean_absolute_error = sae / n;
    m.max_error = maxe;
    m.r2 = 1.0 - (see / n) / var_y;
    m.explained_variance = 1.0 - var_e / var_y;
    m.pearson = cov / std::sqrt(var_y * var_p);
    return m;
}

// Small deterministic generator for property tests (decoupled from the
// library's cohort generator).
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace oracles
