#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dalpha {

using Arc = std::pair<int, int>;

/// Simple digraph on vertices 0..n-1, no loops, no parallel arcs.
/// Value type; construction validates, mutation goes through
/// copy-and-extend helpers so instances never hold a half-built state.
class Digraph {
public:
    int num_vertices() const { return n_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }

    /// Arcs in lexicographic (tail, head) order.
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Out-neighbours of u, ascending.
    const std::vector<int>& out(int u) const { return out_[u]; }
    /// In-neighbours of v, ascending.
    const std::vector<int>& in(int v) const { return in_[v]; }

    int out_degree(int u) const { return static_cast<int>(out_[u].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    bool has_arc(int u, int v) const;

    /// All n(n-1) ordered pairs present.
    bool is_complete() const {
        return static_cast<long long>(arcs_.size()) ==
               static_cast<long long>(n_) * (n_ - 1);
    }

    bool operator==(const Digraph&) const = default;

private:
    friend Digraph build_digraph(int, const std::vector<Arc>&);

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Validates endpoints, rejects loops, deduplicates, sorts.
/// Throws InvalidArc or InvalidParams (n < 1).
Digraph build_digraph(int n, const std::vector<Arc>& arcs);

/// Copy of g with one more arc. Throws InvalidArc / ArcExists.
Digraph add_arc(const Digraph& g, int u, int v);

/// Disjoint union; vertices of b are shifted by a.num_vertices().
Digraph disjoint_union(const Digraph& a, const Digraph& b);

/// Disjoint union plus all arcs in both directions between the parts.
Digraph join(const Digraph& a, const Digraph& b);

/// Tarjan SCC count == 1. A single vertex is strongly connected.
bool is_strongly_connected(const Digraph& g);

/// No directed cycle.
bool is_acyclic(const Digraph& g);

} // namespace dalpha
