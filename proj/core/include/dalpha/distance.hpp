#pragma once

#include <cstdint>
#include <vector>

#include "dalpha/digraph.hpp"

namespace dalpha {

/// All-pairs directed distances plus per-vertex transmissions
/// Tr(v) = sum of distances from v to every other vertex.
struct DistanceData {
    int n = 0;
    std::vector<int> dist;                  // row-major n*n, dist[u*n+v]
    std::vector<std::int64_t> transmission; // row sums of dist
    std::int64_t tr_min = 0;
    std::int64_t tr_max = 0;

    int d(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

/// BFS from every vertex. Throws NotStronglyConnected when some
/// ordered pair has no directed path.
DistanceData distance_data(const Digraph& g);

} // namespace dalpha
