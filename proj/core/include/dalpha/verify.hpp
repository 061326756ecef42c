#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dalpha/digraph.hpp"

namespace dalpha {

/// Which invariant slice of the strongly connected digraphs on n
/// vertices a scan ranges over.
enum class ClassKind { All, Dichromatic, VertexConn, ArcConn };

struct ClassSelector {
    ClassKind kind = ClassKind::All;
    int k = 0; // required invariant value; ignored for All

    static ClassSelector all() { return {ClassKind::All, 0}; }
    static ClassSelector dichromatic(int k) { return {ClassKind::Dichromatic, k}; }
    static ClassSelector vertex_conn(int k) { return {ClassKind::VertexConn, k}; }
    static ClassSelector arc_conn(int k) { return {ClassKind::ArcConn, k}; }

    bool operator==(const ClassSelector&) const = default;
};

std::string to_string(const ClassSelector& sel); // "all", "dichromatic(2)", ...

/// Result of one exhaustive (n, alpha, class) cell. Extremes are
/// grouped up to isomorphism and a tie tolerance of 1e-8, so a false
/// uniqueness claim shows up as extra keys rather than passing
/// silently. Keys are canonical_key values.
struct ExtremalReport {
    int n = 0;
    double alpha = 0.0;
    ClassSelector selector;
    std::uint64_t class_size = 0;

    double min_value = 0.0;
    double max_value = 0.0;
    std::vector<std::uint64_t> minimizers;
    std::vector<std::uint64_t> maximizers;

    /// Lowest tie level strictly above the minimum, when the class
    /// has one; feeds the second-minimum and margin checks.
    bool has_second_min = false;
    double second_min_value = 0.0;
    std::vector<std::uint64_t> second_minimizers;
    double min_margin = 0.0; // second_min_value - min_value

    /// The predicted extremal digraphs for this cell, empty when
    /// nothing is predicted. proven says whether a proven result
    /// covers this exact (n, k, alpha); outside that region the
    /// prediction is the conjectured/empirical one.
    std::vector<std::uint64_t> expected_minimizers;
    std::vector<std::uint64_t> expected_maximizers;
    bool proven = false;
    bool matches = false;

    /// Inline per-member checks: transmission sandwich, refined
    /// row-sum sandwich, strict alpha*Tr_max lower bound; and the
    /// "bounds collapse exactly for transmission-regular digraphs"
    /// biconditional.
    std::uint64_t bound_violations = 0;
    std::uint64_t regularity_mismatches = 0;
};

/// Exhaustively scans the class over every strongly connected digraph
/// on n vertices. shards <= 0 means one shard per available hardware
/// thread; the report is identical for any shard count.
/// Throws SizeCap (n over the enumeration cap) and EmptyClass.
ExtremalReport extremal_scan(int n, double alpha, const ClassSelector& sel,
                             int shards = 0, bool allow_n6 = false);

/// One enumeration pass serving many (selector, alpha) cells; reports
/// come back in selector-major, alpha-minor order. This is what the
/// verification suite calls, since the enumeration dwarfs everything
/// else at n = 5.
std::vector<ExtremalReport> extremal_scan_grid(int n, const std::vector<double>& alphas,
                                               const std::vector<ClassSelector>& selectors,
                                               int shards = 0, bool allow_n6 = false);

/// Random-trial check that adding any missing arc strictly lowers the
/// Perron root at every alpha. Trials cycle through n_range; sampling
/// is rejection over arc subsets, recorded seed makes runs replayable.
struct MonotonicityReport {
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<int> n_range;
    std::vector<double> alphas;
    std::uint64_t comparisons = 0;
    std::uint64_t counterexamples = 0; // cases where mu failed to drop
    double min_gap = 0.0;              // smallest drop seen anywhere
};

MonotonicityReport monotonicity_check(int trials, const std::vector<int>& n_range,
                                      std::uint64_t seed, const std::vector<double>& alphas);

/// One (n, k, alpha) cell of the closed-form sweep over m.
struct ConjectureCell {
    int n = 0;
    int k = 0;
    double alpha = 0.0;
    int argmin_m = 0;          // smallest m attaining the minimum
    double margin = 0.0;       // runner-up minus best; 0 when only one m exists
    bool counterexample = false; // argmin_m != 1
    std::vector<double> mu_by_m; // mu_closed_form(n,k,m,alpha), m = 1..n-k-1
};

/// Closed-form probe of the "m = 1 always wins" conjecture for
/// 4 <= n <= n_max, 1 <= k <= n-2, alpha in the grid restricted to
/// (0,1). Pure arithmetic, no enumeration.
std::vector<ConjectureCell> conjecture_sweep(int n_max, const std::vector<double>& alphas);

/// Exhaustive check that in every strongly connected digraph with
/// arc connectivity exactly k and all in/out degrees > k, deleting
/// any minimum arc cut leaves exactly two strongly connected
/// components, each on at least k+2 vertices.
struct CutComponentReport {
    int n = 0;
    int k = 0;
    std::uint64_t class_size = 0;  // digraphs satisfying the hypotheses
    std::uint64_t cuts_checked = 0; // minimum cuts examined over the class
    std::uint64_t violations = 0;
    bool vacuous = false; // class_size == 0, the check holds emptily
};

CutComponentReport cut_component_check(int n, int k, int shards = 0, bool allow_n6 = false);

} // namespace dalpha
