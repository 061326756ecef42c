#include "dalpha/families.hpp"

#include <cmath>
#include <numeric>

#include "dalpha/errors.hpp"

namespace dalpha {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParams(what);
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw InvalidAlpha("alpha must lie in [0,1), got " + std::to_string(alpha));
}

} // namespace

Digraph complete_digraph(int n) {
    require(n >= 1, "complete digraph needs n >= 1");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return build_digraph(n, arcs);
}

Digraph directed_cycle(int n) {
    require(n >= 2, "directed cycle needs n >= 2");
    std::vector<Arc> arcs;
    arcs.reserve(n);
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return build_digraph(n, arcs);
}

Digraph transitive_tournament(int n) {
    require(n >= 1, "transitive tournament needs n >= 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
    return build_digraph(n, arcs);
}

Digraph t_partition_digraph(const std::vector<int>& sizes) {
    require(!sizes.empty(), "t-partition digraph needs at least one class");
    for (int s : sizes) require(s >= 1, "t-partition class sizes must be >= 1");
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<int> cls(n);
    int base = 0, c = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i) cls[base + i] = c;
        base += s;
        ++c;
    }
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (cls[u] != cls[v] || u < v) arcs.emplace_back(u, v);
        }
    return build_digraph(n, arcs);
}

std::vector<int> t_star_sizes(int n, int k) {
    require(k >= 2 && k <= n, "balanced t-partition digraph needs 2 <= k <= n");
    std::vector<int> sizes(k, n / k);
    for (int i = 0; i < n % k; ++i) ++sizes[i];
    return sizes;
}

Digraph t_star(int n, int k) { return t_partition_digraph(t_star_sizes(n, k)); }

Digraph k_n_k_m(int n, int k, int m) {
    require(k >= 1 && m >= 1 && n - k - m >= 1,
            "K(n,k,m) needs k >= 1 and 1 <= m <= n-k-1");
    std::vector<Arc> arcs;
    auto clique = [&](int lo, int hi) {
        for (int u = lo; u < hi; ++u)
            for (int v = lo; v < hi; ++v)
                if (u != v) arcs.emplace_back(u, v);
    };
    clique(0, k);         // hub
    clique(k, k + m);     // source clique
    clique(k + m, n);     // sink clique
    for (int h = 0; h < k; ++h)
        for (int v = k; v < n; ++v) {
            arcs.emplace_back(h, v);
            arcs.emplace_back(v, h);
        }
    for (int u = k; u < k + m; ++u)
        for (int v = k + m; v < n; ++v) arcs.emplace_back(u, v);
    return build_digraph(n, arcs);
}

double mu_closed_form(int n, int k, int m, double alpha) {
    require(k >= 1 && m >= 1 && n - k - m >= 1,
            "mu_closed_form needs k >= 1 and 1 <= m <= n-k-1");
    check_alpha(alpha);
    double a = alpha, N = n, M = m, K = k;
    double delta = (1 - a) * (1 - a) * N * N + (2 * a * a - 6 * a + 4) * M * N +
                   (a * a + 4 * a - 4) * M * M - 4 * (1 - a) * K * M;
    if (delta < 0) throw NegativeRadicand("mu_closed_form radicand went negative");
    return (a * M + a * N + N - 2 + std::sqrt(delta)) / 2;
}

double second_min_closed_form(int n, double alpha) {
    require(n >= 3, "second minimum needs n >= 3");
    check_alpha(alpha);
    double a = alpha, N = n;
    double delta = (1 - a) * (1 - a) * N * N - 2 * a * (1 - a) * N + a * a - 4 * a + 4;
    if (delta < 0) throw NegativeRadicand("second_min_closed_form radicand went negative");
    return (N + a * N + a - 2 + std::sqrt(delta)) / 2;
}

Digraph build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Complete: return complete_digraph(spec.n);
        case FamilySpec::Kind::Cycle: return directed_cycle(spec.n);
        case FamilySpec::Kind::TransitiveTournament: return transitive_tournament(spec.n);
        case FamilySpec::Kind::TPartition: return t_partition_digraph(spec.sizes);
        case FamilySpec::Kind::TStar: return t_star(spec.n, spec.k);
        case FamilySpec::Kind::Knkm: return k_n_k_m(spec.n, spec.k, spec.m);
    }
    throw InvalidParams("unknown family kind");
}

} // namespace dalpha
