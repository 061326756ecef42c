#include "dalpha/connectivity.hpp"

#include <algorithm>
#include <vector>

namespace dalpha {

namespace {

// Edmonds-Karp on an explicit residual arc list. Graphs here have at
// most a few hundred arcs, so the O(V E^2) bound is irrelevant.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1) {}

    void add_edge(int u, int v, int cap) {
        push(u, v, cap);
        push(v, u, 0);
    }

    int run(int s, int t, int stop_at) {
        int flow = 0;
        while (flow < stop_at && augment(s, t)) ++flow;
        return flow;
    }

private:
    struct E {
        int to, next, cap;
    };
    std::vector<E> edges_;
    std::vector<int> head_;

    void push(int u, int v, int cap) {
        edges_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(edges_.size()) - 1;
    }

    bool augment(int s, int t) {
        std::vector<int> parent_edge(head_.size(), -1);
        std::vector<int> queue{s};
        parent_edge[s] = -2;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int e = head_[u]; e != -1; e = edges_[e].next) {
                int v = edges_[e].to;
                if (edges_[e].cap > 0 && parent_edge[v] == -1) {
                    parent_edge[v] = e;
                    if (v == t) {
                        for (int x = t; x != s;) {
                            int pe = parent_edge[x];
                            --edges_[pe].cap;
                            ++edges_[pe ^ 1].cap;
                            x = edges_[pe ^ 1].to;
                        }
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        return false;
    }
};

// Internally-disjoint u->v paths for a non-adjacent pair, classic
// vertex-splitting reduction: w_in = w, w_out = w + n.
int disjoint_paths(const Digraph& g, int u, int v, int stop_at) {
    int n = g.num_vertices();
    MaxFlow f(2 * n);
    for (int w = 0; w < n; ++w) f.add_edge(w, w + n, 1);
    for (auto [a, b] : g.arcs()) f.add_edge(a + n, b, n);
    return f.run(u + n, v, stop_at);
}

} // namespace

VertexConnectivity vertex_connectivity(const Digraph& g) {
    int n = g.num_vertices();
    if (g.is_complete()) return {n - 1, true};
    int best = n - 1;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.has_arc(u, v))
                best = std::min(best, disjoint_paths(g, u, v, best));
    return {best, false};
}

int arc_connectivity(const Digraph& g) {
    int n = g.num_vertices();
    if (n == 1) return 0;
    // Every arc cut separates some vertex from vertex 0 in one
    // direction, so fixing one endpoint is enough.
    auto flow = [&](int s, int t, int stop_at) {
        MaxFlow f(n);
        for (auto [a, b] : g.arcs()) f.add_edge(a, b, 1);
        return f.run(s, t, stop_at);
    };
    int best = g.num_arcs();
    for (int v = 1; v < n && best > 0; ++v) {
        best = std::min(best, flow(0, v, best));
        best = std::min(best, flow(v, 0, best));
    }
    return best;
}

} // namespace dalpha
