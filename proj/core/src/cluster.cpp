#include "dentage/cluster.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "dentage/errors.hpp"

namespace dentage {

namespace {

// Indices (into `order`) of points within eps of values[order[at]]; the sorted
// order makes the region query a contiguous window.
std::pair<std::size_t, std::size_t> neighborhood(const std::vector<std::size_t>& order,
                                                 std::span<const double> values, std::size_t at,
                                                 double eps) {
    const double v = values[order[at]];
    std::size_t lo = at;
    while (lo > 0 && v - values[order[lo - 1]] <= eps) --lo;
    std::size_t hi = at;
    while (hi + 1 < order.size() && values[order[hi + 1]] - v <= eps) ++hi;
    return {lo, hi};
}

}  // namespace

DbscanResult dbscan_1d(std::span<const double> values, double eps, int min_pts) {
    if (!(eps > 0.0)) {
        throw Error::domain("reliability", "INVALID_EPS", "eps must be > 0");
    }
    if (min_pts < 1) {
        throw Error::domain("reliability", "INVALID_MIN_PTS", "min_pts must be >= 1");
    }
    const std::size_t n = values.size();
    DbscanResult result;
    result.cluster_of.assign(n, -1);
    if (n == 0) return result;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<char> visited(n, 0);  // indexed by position in `order`
    int next_cluster = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (visited[i]) continue;
        visited[i] = 1;
        auto [lo, hi] = neighborhood(order, values, i, eps);
        if (static_cast<int>(hi - lo + 1) < min_pts) continue;  // noise unless adopted later

        const int cluster = next_cluster++;
        result.cluster_of[order[i]] = cluster;
        std::deque<std::size_t> frontier;
        for (std::size_t j = lo; j <= hi; ++j) {
            if (j != i) frontier.push_back(j);
        }
        while (!frontier.empty()) {
            const std::size_t j = frontier.front();
            frontier.pop_front();
            if (result.cluster_of[order[j]] == -1) {
                result.cluster_of[order[j]] = cluster;  // border or core, it joins
            }
            if (visited[j]) continue;
            visited[j] = 1;
            auto [jlo, jhi] = neighborhood(order, values, j, eps);
            if (static_cast<int>(jhi - jlo + 1) >= min_pts) {
                for (std::size_t k = jlo; k <= jhi; ++k) {
                    if (result.cluster_of[order[k]] == -1 || !visited[k]) frontier.push_back(k);
                }
            }
        }
    }
    result.cluster_count = next_cluster;
    return result;
}

}  // namespace dentage
