#include "dalpha/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "dalpha/canonical.hpp"
#include "dalpha/coloring.hpp"
#include "dalpha/connectivity.hpp"
#include "dalpha/distance.hpp"
#include "dalpha/enumerate.hpp"
#include "dalpha/errors.hpp"
#include "dalpha/families.hpp"
#include "dalpha/spectrum.hpp"

namespace dalpha {

std::string to_string(const ClassSelector& sel) {
    switch (sel.kind) {
        case ClassKind::All: return "all";
        case ClassKind::Dichromatic: return "dichromatic(" + std::to_string(sel.k) + ")";
        case ClassKind::VertexConn: return "vertex_conn(" + std::to_string(sel.k) + ")";
        case ClassKind::ArcConn: return "arc_conn(" + std::to_string(sel.k) + ")";
    }
    return "?";
}

namespace {

constexpr double kTieTol = 1e-8;     // grouping extremes into levels
constexpr double kBoundSlack = 1e-9; // inline sandwich slack
// The theorem boundary is 4/5; double(0.8) sits 4.4e-17 above it,
// and the comparison must include the grid point 0.8 itself.
constexpr double kVconnAlphaCeil = 0.8 + 1e-12;

struct Candidate {
    double value;
    std::uint64_t mask;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.mask < b.mask;
}

/// Retains every candidate within kTieTol of the two lowest tie
/// levels seen so far. Pruning only ever discards candidates that
/// can no longer reach either level, so merging trackers from any
/// shard split yields the same final levels.
class MinTwoTracker {
public:
    void insert(double v, std::uint64_t mask) {
        if (v > cut_) return;
        items_.push_back({v, mask});
        if (items_.size() >= 8192) compact();
    }

    void merge(MinTwoTracker&& other) {
        items_.insert(items_.end(), other.items_.begin(), other.items_.end());
        compact();
    }

    struct Levels {
        double v1 = 0.0;
        std::vector<std::uint64_t> first;
        bool has2 = false;
        double v2 = 0.0;
        std::vector<std::uint64_t> second;
    };

    Levels finalize() {
        compact();
        Levels out;
        if (items_.empty()) return out;
        out.v1 = items_.front().value;
        std::size_t i = 0;
        for (; i < items_.size() && items_[i].value <= out.v1 + kTieTol; ++i)
            out.first.push_back(items_[i].mask);
        if (i < items_.size()) {
            out.has2 = true;
            out.v2 = items_[i].value;
            for (; i < items_.size() && items_[i].value <= out.v2 + kTieTol; ++i)
                out.second.push_back(items_[i].mask);
        }
        return out;
    }

private:
    void compact() {
        if (items_.empty()) return;
        std::sort(items_.begin(), items_.end(), candidate_less);
        double v1 = items_.front().value;
        std::size_t i = 0;
        while (i < items_.size() && items_[i].value <= v1 + kTieTol) ++i;
        double limit = (i < items_.size() ? items_[i].value : v1) + kTieTol;
        while (!items_.empty() && items_.back().value > limit) items_.pop_back();
        cut_ = limit;
    }

    std::vector<Candidate> items_;
    double cut_ = std::numeric_limits<double>::infinity();
};

/// Single-level mirror image for the maximum side.
class MaxOneTracker {
public:
    void insert(double v, std::uint64_t mask) {
        if (v < cut_) return;
        items_.push_back({v, mask});
        if (items_.size() >= 8192) compact();
    }

    void merge(MaxOneTracker&& other) {
        items_.insert(items_.end(), other.items_.begin(), other.items_.end());
        compact();
    }

    struct Level {
        double value = 0.0;
        std::vector<std::uint64_t> masks;
    };

    Level finalize() {
        compact();
        Level out;
        if (items_.empty()) return out;
        std::sort(items_.begin(), items_.end(), candidate_less);
        out.value = items_.back().value;
        for (const auto& c : items_)
            if (c.value >= out.value - kTieTol) out.masks.push_back(c.mask);
        return out;
    }

private:
    void compact() {
        if (items_.empty()) return;
        double top = items_.front().value;
        for (const auto& c : items_) top = std::max(top, c.value);
        cut_ = top - kTieTol;
        std::erase_if(items_, [&](const Candidate& c) { return c.value < cut_; });
    }

    std::vector<Candidate> items_;
    double cut_ = -std::numeric_limits<double>::infinity();
};

struct CellAccum {
    std::uint64_t count = 0;
    MinTwoTracker mins;
    MaxOneTracker maxs;
    std::uint64_t bound_violations = 0;
    std::uint64_t regularity_mismatches = 0;

    void merge(CellAccum&& o) {
        count += o.count;
        mins.merge(std::move(o.mins));
        maxs.merge(std::move(o.maxs));
        bound_violations += o.bound_violations;
        regularity_mismatches += o.regularity_mismatches;
    }
};

struct Needs {
    bool chi = false;
    bool kappa = false;
    bool kappa_prime = false;
};

Needs selector_needs(const std::vector<ClassSelector>& sels) {
    Needs n;
    for (const auto& s : sels) {
        if (s.kind == ClassKind::Dichromatic) n.chi = true;
        if (s.kind == ClassKind::VertexConn) n.kappa = true;
        if (s.kind == ClassKind::ArcConn) n.kappa_prime = true;
    }
    return n;
}

bool is_member(const ClassSelector& sel, int chi, int kappa, int kappa_prime) {
    switch (sel.kind) {
        case ClassKind::All: return true;
        case ClassKind::Dichromatic: return chi == sel.k;
        case ClassKind::VertexConn: return kappa == sel.k;
        case ClassKind::ArcConn: return kappa_prime == sel.k;
    }
    return false;
}

int invariant_of(const ClassSelector& sel, const Digraph& g) {
    switch (sel.kind) {
        case ClassKind::All: return 0;
        case ClassKind::Dichromatic: return dichromatic_number(g).num_classes;
        case ClassKind::VertexConn: return vertex_connectivity(g).value;
        case ClassKind::ArcConn: return arc_connectivity(g);
    }
    return 0;
}

void scan_interval(int n, std::uint64_t lo, std::uint64_t hi,
                   const std::vector<double>& alphas,
                   const std::vector<ClassSelector>& sels, const Needs& needs,
                   std::vector<CellAccum>& cells) {
    std::size_t na = alphas.size();
    std::vector<double> mu(na);
    std::vector<char> bad(na), mismatch(na);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (!mask_strongly_connected(n, mask)) continue;
        Digraph g = digraph_from_mask(n, mask);
        DistanceData dd = distance_data(g);
        for (std::size_t ai = 0; ai < na; ++ai) {
            double a = alphas[ai];
            double value = perron(dalpha_matrix(dd, a)).radius;
            BoundsReport b = row_sum_bounds(dd, a);
            mu[ai] = value;
            bad[ai] = !(value >= b.lower_rowsum - kBoundSlack &&
                        value <= b.upper_rowsum + kBoundSlack &&
                        value > b.trmax_bound &&
                        value >= static_cast<double>(dd.tr_min) - kBoundSlack &&
                        value <= static_cast<double>(dd.tr_max) + kBoundSlack);
            bool collapsed = b.upper_rowsum - b.lower_rowsum <= kBoundSlack;
            mismatch[ai] = collapsed != b.distance_regular;
        }
        int chi = needs.chi ? dichromatic_number(g).num_classes : -1;
        int kappa = needs.kappa ? vertex_connectivity(g).value : -1;
        int kappa_prime = needs.kappa_prime ? arc_connectivity(g) : -1;
        for (std::size_t si = 0; si < sels.size(); ++si) {
            if (!is_member(sels[si], chi, kappa, kappa_prime)) continue;
            for (std::size_t ai = 0; ai < na; ++ai) {
                CellAccum& c = cells[si * na + ai];
                ++c.count;
                c.mins.insert(mu[ai], mask);
                c.maxs.insert(mu[ai], mask);
                c.bound_violations += bad[ai];
                c.regularity_mismatches += mismatch[ai];
            }
        }
    }
}

std::vector<std::uint64_t> canonical_set(int n, const std::vector<std::uint64_t>& masks,
                                         const ClassSelector& sel) {
    std::vector<std::uint64_t> keys;
    keys.reserve(masks.size());
    for (std::uint64_t m : masks) {
        Digraph g = digraph_from_mask(n, m);
        if (sel.kind != ClassKind::All && invariant_of(sel, g) != sel.k)
            throw Error("extremal scan bookkeeping: reported digraph left its class");
        keys.push_back(canonical_key(n, m));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

void fill_expected(ExtremalReport& r) {
    int n = r.n;
    int k = r.selector.k;
    switch (r.selector.kind) {
        case ClassKind::All:
            r.expected_minimizers = {canonical_key(complete_digraph(n))};
            r.expected_maximizers = {canonical_key(directed_cycle(n))};
            r.proven = true;
            break;
        case ClassKind::Dichromatic:
            if (k >= 2 && k <= n) {
                r.expected_minimizers = {canonical_key(t_star(n, k))};
                r.proven = true;
            }
            break;
        case ClassKind::VertexConn:
        case ClassKind::ArcConn:
            if (k >= 1 && k <= n - 2) {
                std::vector<std::uint64_t> keys{canonical_key(k_n_k_m(n, k, 1))};
                if (r.alpha == 0.0) keys.push_back(canonical_key(k_n_k_m(n, k, n - k - 1)));
                std::sort(keys.begin(), keys.end());
                keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
                r.expected_minimizers = std::move(keys);
                if (r.selector.kind == ClassKind::ArcConn)
                    r.proven = true;
                else
                    r.proven =
                        r.alpha == 0.0 || r.alpha <= kVconnAlphaCeil || n >= 2 * k + 2;
            }
            break;
    }
}

int effective_shards(int shards) {
    if (shards > 0) return shards;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

std::vector<ExtremalReport> extremal_scan_grid(int n, const std::vector<double>& alphas,
                                               const std::vector<ClassSelector>& selectors,
                                               int shards, bool allow_n6) {
    int cap = enumeration_cap(allow_n6);
    if (n < 2) throw InvalidParams("extremal scan needs n >= 2");
    if (n > cap)
        throw SizeCap("extremal scan is capped at n <= " + std::to_string(cap) +
                      " here, got n=" + std::to_string(n));
    if (alphas.empty() || selectors.empty())
        throw InvalidParams("extremal scan needs at least one alpha and one class");
    for (double a : alphas)
        if (!(a >= 0.0) || !(a < 1.0))
            throw InvalidAlpha("alpha must lie in [0,1), got " + std::to_string(a));

    Needs needs = selector_needs(selectors);
    std::size_t ncells = selectors.size() * alphas.size();
    int S = effective_shards(shards);
    std::uint64_t total = std::uint64_t{1} << arc_slots(n);
    if (static_cast<std::uint64_t>(S) > total) S = 1;

    std::vector<std::vector<CellAccum>> locals(S);
    for (auto& l : locals) l.resize(ncells);

    if (S == 1) {
        scan_interval(n, 0, total, alphas, selectors, needs, locals[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(S);
        std::uint64_t chunk = total / S, extra = total % S, lo = 0;
        for (int s = 0; s < S; ++s) {
            std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(s) < extra ? 1 : 0);
            pool.emplace_back([&, s, lo, hi] {
                try {
                    scan_interval(n, lo, hi, alphas, selectors, needs, locals[s]);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
            lo = hi;
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (int s = 1; s < S; ++s)
            for (std::size_t c = 0; c < ncells; ++c) locals[0][c].merge(std::move(locals[s][c]));
    }

    std::vector<ExtremalReport> reports;
    reports.reserve(ncells);
    for (std::size_t si = 0; si < selectors.size(); ++si) {
        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
            CellAccum& c = locals[0][si * alphas.size() + ai];
            ExtremalReport r;
            r.n = n;
            r.alpha = alphas[ai];
            r.selector = selectors[si];
            r.class_size = c.count;
            if (c.count == 0)
                throw EmptyClass("no strongly connected digraph on " + std::to_string(n) +
                                 " vertices has class " + to_string(selectors[si]));
            auto lows = c.mins.finalize();
            auto high = c.maxs.finalize();
            r.min_value = lows.v1;
            r.minimizers = canonical_set(n, lows.first, selectors[si]);
            r.has_second_min = lows.has2;
            if (lows.has2) {
                r.second_min_value = lows.v2;
                r.second_minimizers = canonical_set(n, lows.second, selectors[si]);
                r.min_margin = lows.v2 - lows.v1;
            }
            r.max_value = high.value;
            r.maximizers = canonical_set(n, high.masks, selectors[si]);
            r.bound_violations = c.bound_violations;
            r.regularity_mismatches = c.regularity_mismatches;
            fill_expected(r);
            r.matches = r.minimizers == r.expected_minimizers &&
                        (r.selector.kind != ClassKind::All ||
                         r.maximizers == r.expected_maximizers);
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

ExtremalReport extremal_scan(int n, double alpha, const ClassSelector& sel, int shards,
                             bool allow_n6) {
    return extremal_scan_grid(n, {alpha}, {sel}, shards, allow_n6).front();
}

MonotonicityReport monotonicity_check(int trials, const std::vector<int>& n_range,
                                      std::uint64_t seed, const std::vector<double>& alphas) {
    if (trials < 1) throw InvalidParams("monotonicity check needs trials >= 1");
    if (n_range.empty()) throw InvalidParams("monotonicity check needs a nonempty n range");
    for (int n : n_range)
        if (n < 2 || n > 8) throw InvalidParams("monotonicity n range must stay within [2,8]");
    MonotonicityReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.n_range = n_range;
    rep.alphas = alphas;
    rep.min_gap = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int n = n_range[t % n_range.size()];
        std::uint64_t mask = random_sc_mask(n, rng, /*exclude_complete=*/true);
        int slots = arc_slots(n);
        int missing = slots - std::popcount(mask);
        int pick = static_cast<int>(
            std::uniform_int_distribution<int>(0, missing - 1)(rng));
        std::uint64_t bit = 0;
        for (int s = 0; s < slots; ++s) {
            if (mask >> s & 1) continue;
            if (pick-- == 0) {
                bit = std::uint64_t{1} << s;
                break;
            }
        }
        DistanceData before = distance_data(digraph_from_mask(n, mask));
        DistanceData after = distance_data(digraph_from_mask(n, mask | bit));
        for (double a : alphas) {
            double mu_before = perron(dalpha_matrix(before, a)).radius;
            double mu_after = perron(dalpha_matrix(after, a)).radius;
            double gap = mu_before - mu_after;
            ++rep.comparisons;
            if (!(gap > 0.0)) ++rep.counterexamples;
            rep.min_gap = std::min(rep.min_gap, gap);
        }
    }
    return rep;
}

std::vector<ConjectureCell> conjecture_sweep(int n_max, const std::vector<double>& alphas) {
    if (n_max < 4) throw InvalidParams("conjecture sweep needs n_max >= 4");
    std::vector<ConjectureCell> cells;
    for (int n = 4; n <= n_max; ++n) {
        for (int k = 1; k <= n - 2; ++k) {
            for (double a : alphas) {
                if (!(a > 0.0) || !(a < 1.0)) continue;
                ConjectureCell c;
                c.n = n;
                c.k = k;
                c.alpha = a;
                int m_count = n - k - 1;
                c.mu_by_m.resize(m_count);
                for (int m = 1; m <= m_count; ++m) {
                    double v = mu_closed_form(n, k, m, a);
                    c.mu_by_m[m - 1] = v;
                    if (m == 1 || v < c.mu_by_m[c.argmin_m - 1]) c.argmin_m = m;
                }
                double best = c.mu_by_m[c.argmin_m - 1];
                c.margin = 0.0;
                bool first = true;
                for (int m = 1; m <= m_count; ++m) {
                    if (m == c.argmin_m) continue;
                    double d = c.mu_by_m[m - 1] - best;
                    if (first || d < c.margin) c.margin = d;
                    first = false;
                }
                c.counterexample = c.argmin_m != 1;
                cells.push_back(std::move(c));
            }
        }
    }
    return cells;
}

namespace {

// SCC sizes of the digraph encoded by mask; writes into sizes[] and
// returns the component count. Closure-based, mirrors nothing from
// the Tarjan implementation on purpose.
int mask_scc_sizes(int n, std::uint64_t mask, int* sizes) {
    unsigned out[8] = {}, in[8] = {};
    int slot = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            if (mask >> slot & 1) {
                out[u] |= 1u << v;
                in[v] |= 1u << u;
            }
            ++slot;
        }
    auto closure = [&](int v, const unsigned* adj) {
        unsigned reach = 1u << v;
        for (;;) {
            unsigned next = reach;
            for (unsigned rem = reach; rem;) {
                int u = std::countr_zero(rem);
                rem &= rem - 1;
                next |= adj[u];
            }
            if (next == reach) return reach;
            reach = next;
        }
    };
    unsigned unassigned = (1u << n) - 1;
    int count = 0;
    while (unassigned) {
        int v = std::countr_zero(unassigned);
        unsigned comp = closure(v, out) & closure(v, in);
        sizes[count++] = std::popcount(comp);
        unassigned &= ~comp;
    }
    return count;
}

struct CutCounts {
    std::uint64_t class_size = 0;
    std::uint64_t cuts_checked = 0;
    std::uint64_t violations = 0;
};

void cut_scan_interval(int n, int k, std::uint64_t lo, std::uint64_t hi, CutCounts& out) {
    int slots = arc_slots(n);
    std::uint64_t row_mask = (std::uint64_t{1} << (n - 1)) - 1;
    std::uint64_t col[8] = {};
    for (int s = 0; s < slots; ++s) col[slot_arc(n, s).second] |= std::uint64_t{1} << s;

    std::vector<int> present;
    std::vector<int> choose(k);
    std::vector<std::uint64_t> min_cuts;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        bool degrees_ok = true;
        for (int u = 0; u < n && degrees_ok; ++u)
            degrees_ok = std::popcount(mask >> (u * (n - 1)) & row_mask) > k &&
                         std::popcount(mask & col[u]) > k;
        if (!degrees_ok) continue;
        if (!mask_strongly_connected(n, mask)) continue;

        present.clear();
        for (int s = 0; s < slots; ++s)
            if (mask >> s & 1) present.push_back(s);
        int m = static_cast<int>(present.size());

        // Arc connectivity by direct cut search: the smallest j with a
        // breaking j-subset. Early-outs keep the n=6 run tractable.
        min_cuts.clear();
        bool below_k = false;
        for (int j = 1; j <= k && !below_k; ++j) {
            for (int i = 0; i < j; ++i) choose[i] = i;
            for (;;) {
                std::uint64_t cut = 0;
                for (int i = 0; i < j; ++i) cut |= std::uint64_t{1} << present[choose[i]];
                if (!mask_strongly_connected(n, mask & ~cut)) {
                    if (j < k) {
                        below_k = true;
                        break;
                    }
                    min_cuts.push_back(cut);
                }
                int i = j - 1;
                while (i >= 0 && choose[i] == m - j + i) --i;
                if (i < 0) break;
                ++choose[i];
                for (int t = i + 1; t < j; ++t) choose[t] = choose[t - 1] + 1;
            }
        }
        if (below_k || min_cuts.empty()) continue; // kappa' != k

        ++out.class_size;
        int sizes[8];
        for (std::uint64_t cut : min_cuts) {
            ++out.cuts_checked;
            int comps = mask_scc_sizes(n, mask & ~cut, sizes);
            bool ok = comps == 2 && sizes[0] >= k + 2 && sizes[1] >= k + 2;
            if (!ok) ++out.violations;
        }
    }
}

} // namespace

CutComponentReport cut_component_check(int n, int k, int shards, bool allow_n6) {
    int cap = enumeration_cap(allow_n6);
    if (n < 2) throw InvalidParams("cut component check needs n >= 2");
    if (k < 1) throw InvalidParams("cut component check needs k >= 1");
    if (n > cap)
        throw SizeCap("cut component check is capped at n <= " + std::to_string(cap) +
                      " here, got n=" + std::to_string(n));
    CutComponentReport rep;
    rep.n = n;
    rep.k = k;
    if (k > n - 2) { // degrees > k are impossible, class empty by arithmetic
        rep.vacuous = true;
        return rep;
    }
    int S = effective_shards(shards);
    std::uint64_t total = std::uint64_t{1} << arc_slots(n);
    if (static_cast<std::uint64_t>(S) > total) S = 1;
    std::vector<CutCounts> locals(S);
    if (S == 1) {
        cut_scan_interval(n, k, 0, total, locals[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(S);
        std::uint64_t chunk = total / S, extra = total % S, lo = 0;
        for (int s = 0; s < S; ++s) {
            std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(s) < extra ? 1 : 0);
            pool.emplace_back([&, s, lo, hi] {
                try {
                    cut_scan_interval(n, k, lo, hi, locals[s]);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
            lo = hi;
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (int s = 1; s < S; ++s) {
            locals[0].class_size += locals[s].class_size;
            locals[0].cuts_checked += locals[s].cuts_checked;
            locals[0].violations += locals[s].violations;
        }
    }
    rep.class_size = locals[0].class_size;
    rep.cuts_checked = locals[0].cuts_checked;
    rep.violations = locals[0].violations;
    rep.vacuous = rep.class_size == 0;
    return rep;
}

} // namespace dalpha
