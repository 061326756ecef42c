#include "dalpha/distance.hpp"

#include <algorithm>
#include <string>

#include "dalpha/errors.hpp"

namespace dalpha {

DistanceData distance_data(const Digraph& g) {
    int n = g.num_vertices();
    DistanceData dd;
    dd.n = n;
    dd.dist.assign(static_cast<std::size_t>(n) * n, -1);
    dd.transmission.assign(n, 0);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int* row = dd.dist.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int v : g.out(u))
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue[tail++] = v;
                }
        }
        std::int64_t sum = 0;
        for (int v = 0; v < n; ++v) {
            if (row[v] < 0)
                throw NotStronglyConnected("no path from " + std::to_string(s) +
                                           " to " + std::to_string(v));
            sum += row[v];
        }
        dd.transmission[s] = sum;
    }
    auto [lo, hi] = std::minmax_element(dd.transmission.begin(), dd.transmission.end());
    dd.tr_min = *lo;
    dd.tr_max = *hi;
    return dd;
}

} // namespace dalpha
