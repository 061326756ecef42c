#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "dalpha/canonical.hpp"
#include "dalpha/digraph.hpp"
#include "dalpha/enumerate.hpp"
#include "dalpha/errors.hpp"
#include "dalpha/families.hpp"

using namespace dalpha;

namespace {

Digraph relabel(const Digraph& g, const std::vector<int>& perm) {
    std::vector<Arc> arcs;
    for (auto [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
    return build_digraph(g.num_vertices(), arcs);
}

} // namespace

TEST_CASE("arc slots are a bijection") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(arc_slots(n) == n * (n - 1));
        std::set<int> seen;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                int s = arc_slot(n, u, v);
                CHECK(s >= 0);
                CHECK(s < arc_slots(n));
                CHECK(seen.insert(s).second);
                CHECK(slot_arc(n, s) == Arc{u, v});
            }
    }
}

TEST_CASE("mask round trips") {
    std::mt19937_64 rng(12);
    for (const auto& g : {complete_digraph(5), directed_cycle(7), k_n_k_m(6, 2, 1)})
        CHECK(digraph_from_mask(g.num_vertices(), arc_mask(g)) == g);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::uint64_t mask = rng() & ((std::uint64_t{1} << arc_slots(n)) - 1);
        CHECK(arc_mask(digraph_from_mask(n, mask)) == mask);
    }
    CHECK_THROWS_AS(arc_mask(complete_digraph(9)), SizeCap);
    CHECK_THROWS_AS(digraph_from_mask(9, 0), SizeCap);
}

TEST_CASE("mask closure agrees with Tarjan") {
    // exhaustive at n = 3, sampled above
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        CHECK(mask_strongly_connected(3, mask) == is_strongly_connected(digraph_from_mask(3, mask)));
    std::mt19937_64 rng(34);
    for (int n = 4; n <= 6; ++n)
        for (int rep = 0; rep < 2000; ++rep) {
            std::uint64_t mask = rng() & ((std::uint64_t{1} << arc_slots(n)) - 1);
            CHECK(mask_strongly_connected(n, mask) ==
                  is_strongly_connected(digraph_from_mask(n, mask)));
        }
}

TEST_CASE("strongly connected counts match the literature") {
    // labeled counts: 1, 18, 1606, 565080 (n = 2..5)
    CHECK(count_sc(2) == 1);
    CHECK(count_sc(3) == 18);
    CHECK(count_sc(4) == 1606);
    CHECK(count_sc(5) == 565080);
}

TEST_CASE("independent recount via Tarjan") {
    for (int n = 2; n <= 5; ++n) {
        std::uint64_t slots = static_cast<std::uint64_t>(arc_slots(n));
        std::uint64_t total = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask)
            if (is_strongly_connected(digraph_from_mask(n, mask))) ++total;
        CHECK(total == count_sc(n));
    }
}

TEST_CASE("range enumeration shards cleanly") {
    std::vector<std::uint64_t> whole;
    enumerate_sc(4, [&](std::uint64_t m) { whole.push_back(m); });
    CHECK(whole.size() == 1606);
    CHECK(std::is_sorted(whole.begin(), whole.end()));

    std::vector<std::uint64_t> pieces;
    std::uint64_t span = std::uint64_t{1} << arc_slots(4);
    for (std::uint64_t first = 0; first < span; first += span / 8)
        enumerate_sc_range(4, first, first + span / 8,
                           [&](std::uint64_t m) { pieces.push_back(m); });
    CHECK(pieces == whole);

    std::vector<std::uint64_t> window;
    enumerate_sc_range(4, whole[10], whole[20] + 1, [&](std::uint64_t m) { window.push_back(m); });
    CHECK(window == std::vector<std::uint64_t>(whole.begin() + 10, whole.begin() + 21));
}

TEST_CASE("enumeration caps") {
    CHECK(enumeration_cap() == 5);
    CHECK(enumeration_cap(true) == 6);
    CHECK_THROWS_AS(enumerate_sc(1, [](std::uint64_t) {}), InvalidParams);
    CHECK_THROWS_AS(enumerate_sc(6, [](std::uint64_t) {}), SizeCap);
    CHECK_THROWS_AS(enumerate_sc(7, [](std::uint64_t) {}, true), SizeCap);
    CHECK_THROWS_AS(enumerate_sc_range(7, 0, 1, [](std::uint64_t) {}), SizeCap);

    setenv("DALPHA_MAX_N", "4", 1);
    CHECK(enumeration_cap() == 4);
    CHECK(enumeration_cap(true) == 4); // env wins over the flag
    CHECK_THROWS_AS(enumerate_sc(5, [](std::uint64_t) {}), SizeCap);
    setenv("DALPHA_MAX_N", "6", 1);
    CHECK(enumeration_cap() == 6);
    setenv("DALPHA_MAX_N", "7", 1);
    CHECK_THROWS_AS(enumeration_cap(), InvalidParams);
    setenv("DALPHA_MAX_N", "1", 1);
    CHECK_THROWS_AS(enumeration_cap(), InvalidParams);
    setenv("DALPHA_MAX_N", "junk", 1);
    CHECK_THROWS_AS(enumeration_cap(), InvalidParams);
    unsetenv("DALPHA_MAX_N");
    CHECK(enumeration_cap() == 5);
}

TEST_CASE("random strongly connected masks") {
    std::mt19937_64 rng(2025);
    std::set<std::uint64_t> seen;
    std::uint64_t full3 = (std::uint64_t{1} << arc_slots(3)) - 1;
    for (int rep = 0; rep < 5000; ++rep) {
        std::uint64_t m = random_sc_mask(3, rng);
        CHECK(mask_strongly_connected(3, m));
        seen.insert(m);
    }
    CHECK(seen.size() == 18); // every class shows up in 5000 draws
    CHECK(seen.count(full3) == 1);
    for (int rep = 0; rep < 2000; ++rep)
        CHECK(random_sc_mask(3, rng, true) != full3);
    for (int rep = 0; rep < 50; ++rep) {
        std::uint64_t m = random_sc_mask(7, rng, true);
        CHECK(mask_strongly_connected(7, m));
    }
}

TEST_CASE("canonical key is a relabeling invariant") {
    std::mt19937_64 rng(321);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 3 + static_cast<int>(rng() % 4);
        auto g = digraph_from_mask(n, random_sc_mask(n, rng));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_key(g) == canonical_key(relabel(g, perm)));
    }
    // reversing a cycle is a relabeling
    auto c5 = directed_cycle(5);
    std::vector<Arc> rev;
    for (auto [u, v] : c5.arcs()) rev.emplace_back(v, u);
    CHECK(canonical_key(c5) == canonical_key(build_digraph(5, rev)));
    CHECK_THROWS_AS(canonical_key(complete_digraph(9)), SizeCap);
}

TEST_CASE("canonical key is idempotent") {
    std::mt19937_64 rng(654);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::uint64_t mask = random_sc_mask(n, rng);
        std::uint64_t key = canonical_key(n, mask);
        CHECK(key <= mask); // minimal over the isomorphism class
        CHECK(canonical_key(n, key) == key);
        CHECK(canonical_key(digraph_from_mask(n, key)) == key);
    }
}

TEST_CASE("unlabeled counts match the literature") {
    // distinct isomorphism classes of strongly connected digraphs:
    // 5 (n = 3), 83 (n = 4), 5048 (n = 5)
    for (int n = 3; n <= 5; ++n) {
        std::set<std::uint64_t> keys;
        enumerate_sc(n, [&](std::uint64_t m) { keys.insert(canonical_key(n, m)); });
        std::uint64_t expected = n == 3 ? 5 : n == 4 ? 83 : 5048;
        CHECK(keys.size() == expected);
    }
}
