#pragma once

#include <span>
#include <vector>

namespace dentage {

// One-dimensional DBSCAN. `min_pts` counts the point itself, matching the
// usual formulation; with min_pts = 1 every point is core and the clusters
// are exactly the maximal chains whose consecutive sorted values differ by
// at most eps (no noise points).
struct DbscanResult {
    std::vector<int> cluster_of;  // per input index; -1 marks noise
    int cluster_count = 0;
};

DbscanResult dbscan_1d(std::span<const double> values, double eps, int min_pts);

}  // namespace dentage
