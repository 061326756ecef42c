#include "dalpha/digraph.hpp"

#include <algorithm>
#include <string>

#include "dalpha/errors.hpp"

namespace dalpha {

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

Digraph build_digraph(int n, const std::vector<Arc>& arcs) {
    if (n < 1) throw InvalidParams("digraph needs at least one vertex, got n=" + std::to_string(n));
    Digraph g;
    g.n_ = n;
    g.arcs_ = arcs;
    for (auto [u, v] : g.arcs_) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidArc("arc (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw InvalidArc("loop at vertex " + std::to_string(u));
    }
    std::sort(g.arcs_.begin(), g.arcs_.end());
    g.arcs_.erase(std::unique(g.arcs_.begin(), g.arcs_.end()), g.arcs_.end());
    g.out_.assign(n, {});
    g.in_.assign(n, {});
    for (auto [u, v] : g.arcs_) {
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
    }
    return g;
}

Digraph add_arc(const Digraph& g, int u, int v) {
    int n = g.num_vertices();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw InvalidArc("arc (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for n=" + std::to_string(n));
    if (u == v) throw InvalidArc("loop at vertex " + std::to_string(u));
    if (g.has_arc(u, v))
        throw ArcExists("arc (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
    auto arcs = g.arcs();
    arcs.emplace_back(u, v);
    return build_digraph(n, arcs);
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    int na = a.num_vertices();
    auto arcs = a.arcs();
    arcs.reserve(arcs.size() + b.arcs().size());
    for (auto [u, v] : b.arcs()) arcs.emplace_back(u + na, v + na);
    return build_digraph(na + b.num_vertices(), arcs);
}

Digraph join(const Digraph& a, const Digraph& b) {
    int na = a.num_vertices();
    int nb = b.num_vertices();
    auto arcs = a.arcs();
    arcs.reserve(arcs.size() + b.arcs().size() + 2u * na * nb);
    for (auto [u, v] : b.arcs()) arcs.emplace_back(u + na, v + na);
    for (int u = 0; u < na; ++u)
        for (int v = na; v < na + nb; ++v) {
            arcs.emplace_back(u, v);
            arcs.emplace_back(v, u);
        }
    return build_digraph(na + nb, arcs);
}

namespace {

// Iterative Tarjan; recursion depth is unbounded on long paths otherwise.
int scc_count(const Digraph& g) {
    int n = g.num_vertices();
    std::vector<int> index(n, -1), low(n, 0), edge_pos(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack, call;
    stack.reserve(n);
    int next = 0, count = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back(root);
        while (!call.empty()) {
            int v = call.back();
            if (index[v] == -1) {
                index[v] = low[v] = next++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            const auto& nbrs = g.out(v);
            while (edge_pos[v] < static_cast<int>(nbrs.size())) {
                int w = nbrs[edge_pos[v]];
                if (index[w] == -1) {
                    call.push_back(w);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
                ++edge_pos[v];
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                ++count;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                } while (w != v);
            }
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back();
                low[parent] = std::min(low[parent], low[v]);
                ++edge_pos[parent];
            }
        }
    }
    return count;
}

} // namespace

bool is_strongly_connected(const Digraph& g) { return scc_count(g) == 1; }

bool is_acyclic(const Digraph& g) {
    // Kahn peeling; leftovers mean a cycle.
    int n = g.num_vertices();
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : g.out(v))
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == n;
}

} // namespace dalpha
