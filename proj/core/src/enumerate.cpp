#include "dalpha/enumerate.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "dalpha/errors.hpp"

namespace dalpha {

namespace {

constexpr int kHardCap = 6;   // enumeration
constexpr int kMaskCap = 8;   // anything bitmask-encoded

void check_mask_n(int n) {
    if (n < 1) throw InvalidParams("need n >= 1");
    if (n > kMaskCap)
        throw SizeCap("arc bitmasks cover n <= " + std::to_string(kMaskCap) +
                      ", got n=" + std::to_string(n));
}

} // namespace

int arc_slots(int n) { return n * (n - 1); }

int arc_slot(int n, int u, int v) { return u * (n - 1) + (v > u ? v - 1 : v); }

Arc slot_arc(int n, int slot) {
    int u = slot / (n - 1);
    int r = slot % (n - 1);
    return {u, r >= u ? r + 1 : r};
}

std::uint64_t arc_mask(const Digraph& g) {
    int n = g.num_vertices();
    check_mask_n(n);
    std::uint64_t mask = 0;
    for (auto [u, v] : g.arcs()) mask |= std::uint64_t{1} << arc_slot(n, u, v);
    return mask;
}

Digraph digraph_from_mask(int n, std::uint64_t mask) {
    check_mask_n(n);
    std::vector<Arc> arcs;
    for (int s = 0; s < arc_slots(n); ++s)
        if (mask >> s & 1) arcs.push_back(slot_arc(n, s));
    return build_digraph(n, arcs);
}

bool mask_strongly_connected(int n, std::uint64_t mask) {
    check_mask_n(n);
    unsigned out[kMaskCap] = {}, in[kMaskCap] = {};
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
    unsigned full = (1u << n) - 1;
    for (auto* adj : {out, in}) {
        unsigned reach = 1;
        for (;;) {
            unsigned next = reach;
            for (unsigned rem = reach; rem;) {
                int u = std::countr_zero(rem);
                rem &= rem - 1;
                next |= adj[u];
            }
            if (next == reach) break;
            reach = next;
        }
        if (reach != full) return false;
    }
    return true;
}

int enumeration_cap(bool allow_n6) {
    if (const char* env = std::getenv("DALPHA_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 2 || v > kHardCap)
            throw InvalidParams(std::string("DALPHA_MAX_N must be an integer in [2,") +
                                std::to_string(kHardCap) + "], got '" + env + "'");
        return static_cast<int>(v);
    }
    return allow_n6 ? kHardCap : kHardCap - 1;
}

void enumerate_sc_range(int n, std::uint64_t first, std::uint64_t last,
                        const std::function<void(std::uint64_t)>& fn) {
    if (n < 2) throw InvalidParams("enumeration needs n >= 2");
    if (n > kHardCap)
        throw SizeCap("enumeration is capped at n <= " + std::to_string(kHardCap));
    std::uint64_t end = std::uint64_t{1} << arc_slots(n);
    if (last > end) last = end;
    for (std::uint64_t mask = first; mask < last; ++mask)
        if (mask_strongly_connected(n, mask)) fn(mask);
}

void enumerate_sc(int n, const std::function<void(std::uint64_t)>& fn, bool allow_n6) {
    int cap = enumeration_cap(allow_n6);
    if (n > cap)
        throw SizeCap("enumeration cap is n <= " + std::to_string(cap) +
                      " here, got n=" + std::to_string(n));
    enumerate_sc_range(n, 0, std::uint64_t{1} << arc_slots(n), fn);
}

std::uint64_t count_sc(int n, bool allow_n6) {
    std::uint64_t count = 0;
    enumerate_sc(n, [&](std::uint64_t) { ++count; }, allow_n6);
    return count;
}

std::uint64_t random_sc_mask(int n, std::mt19937_64& rng, bool exclude_complete) {
    check_mask_n(n);
    if (n < 2) throw InvalidParams("random SC digraph needs n >= 2");
    std::uint64_t full = (std::uint64_t{1} << arc_slots(n)) - 1;
    for (;;) {
        std::uint64_t mask = rng() & full;
        if (exclude_complete && mask == full) continue;
        if (mask_strongly_connected(n, mask)) return mask;
    }
}

} // namespace dalpha
