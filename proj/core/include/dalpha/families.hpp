#pragma once

#include <string>
#include <vector>

#include "dalpha/digraph.hpp"

namespace dalpha {

/// K_n: every ordered pair is an arc. n >= 1.
Digraph complete_digraph(int n);

/// C_n: arcs (i, i+1 mod n). n >= 2.
Digraph directed_cycle(int n);

/// Arc (i, j) iff i < j; acyclic, not strongly connected for n >= 2.
Digraph transitive_tournament(int n);

/// Classes laid out contiguously in the given order; each class
/// induces a transitive tournament and every cross-class pair is a
/// digon. One class reproduces the transitive tournament itself.
Digraph t_partition_digraph(const std::vector<int>& sizes);

/// Class sizes of the balanced t-partition digraph on n vertices and
/// k classes: the n mod k larger classes come first.
std::vector<int> t_star_sizes(int n, int k);

/// Balanced t-partition digraph; the unique minimiser of the
/// alpha-distance Perron root among strongly connected digraphs with
/// dichromatic number k. Requires 2 <= k <= n (one class is never
/// strongly connected).
Digraph t_star(int n, int k);

/// K(n,k,m): a k-clique hub joined in both directions to a source
/// clique K_m and a sink clique K_{n-k-m}, plus one-way arcs from the
/// source clique to the sink clique. Vertex layout: hub [0,k), source
/// [k,k+m), sink [k+m,n). Requires k >= 1 and 1 <= m <= n-k-1.
Digraph k_n_k_m(int n, int k, int m);

/// Perron root of D_alpha(K(n,k,m)) in closed form, via the 2x2
/// quotient over the equitable partition {hub+source, sink}:
///   mu = (alpha(m+n) + n - 2 + sqrt(delta)) / 2,
///   delta = (1-alpha)^2 n^2 + (2 alpha^2 - 6 alpha + 4) m n
///         + (alpha^2 + 4 alpha - 4) m^2 - 4 (1-alpha) k m.
/// Kept free of any Digraph or eigensolver dependency on purpose; it
/// cross-checks the numeric path rather than reusing it.
double mu_closed_form(int n, int k, int m, double alpha);

/// Second-smallest Perron root over all strongly connected digraphs
/// on n vertices (the smallest is n-1, attained only by K_n):
///   (n + alpha n + alpha - 2
///      + sqrt((1-alpha)^2 n^2 - 2 alpha (1-alpha) n
///             + alpha^2 - 4 alpha + 4)) / 2,
/// attained by K(n, n-2, 1). Written out independently of
/// mu_closed_form so the two can check each other.
double second_min_closed_form(int n, double alpha);

/// Tagged family description, the exchange type between the CLI and
/// the constructors above.
struct FamilySpec {
    enum class Kind { Complete, Cycle, TransitiveTournament, TPartition, TStar, Knkm };
    Kind kind = Kind::Complete;
    int n = 0;
    int k = 0;               // TStar, Knkm
    int m = 0;               // Knkm
    std::vector<int> sizes;  // TPartition
};

Digraph build_family(const FamilySpec& spec);

} // namespace dalpha
