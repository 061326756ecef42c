#include "dalpha/coloring.hpp"

#include <array>
#include <cstdint>
#include <string>

#include "dalpha/errors.hpp"

namespace dalpha {

namespace {

constexpr int kMaxColoringN = 10;

struct Search {
    int n;
    int k;
    std::array<std::uint16_t, kMaxColoringN> out_mask{};
    std::array<std::uint16_t, kMaxColoringN> class_mask{};
    std::vector<int>* assignment;

    // Induced subdigraph on `mask` is acyclic iff sink peeling empties it.
    bool acyclic(std::uint16_t mask) const {
        bool peeled = true;
        while (mask && peeled) {
            peeled = false;
            for (int v = 0; v < n; ++v) {
                std::uint16_t bit = static_cast<std::uint16_t>(1u << v);
                if ((mask & bit) && !(out_mask[v] & mask)) {
                    mask = static_cast<std::uint16_t>(mask & ~bit);
                    peeled = true;
                }
            }
        }
        return mask == 0;
    }

    bool extend(int v, int used) {
        if (v == n) return true;
        // A fresh class is only opened as the first unused index, so
        // permuting class labels never revisits the same partition.
        int limit = used < k ? used + 1 : k;
        for (int c = 0; c < limit; ++c) {
            std::uint16_t bit = static_cast<std::uint16_t>(1u << v);
            std::uint16_t next = static_cast<std::uint16_t>(class_mask[c] | bit);
            if (!acyclic(next)) continue;
            class_mask[c] = next;
            (*assignment)[v] = c;
            if (extend(v + 1, c == used ? used + 1 : used)) return true;
            class_mask[c] = static_cast<std::uint16_t>(next & ~bit);
        }
        return false;
    }
};

} // namespace

Coloring dichromatic_number(const Digraph& g) {
    int n = g.num_vertices();
    if (n > kMaxColoringN)
        throw SizeCap("dichromatic number is exact only up to n=" +
                      std::to_string(kMaxColoringN) + ", got n=" + std::to_string(n));
    Coloring result;
    result.classes.assign(n, 0);
    Search s;
    s.n = n;
    s.assignment = &result.classes;
    for (int v = 0; v < n; ++v) {
        std::uint16_t m = 0;
        for (int w : g.out(v)) m = static_cast<std::uint16_t>(m | (1u << w));
        s.out_mask[v] = m;
    }
    for (int k = 1; k <= n; ++k) {
        s.k = k;
        s.class_mask.fill(0);
        if (s.extend(0, 0)) {
            result.num_classes = k;
            return result;
        }
    }
    throw Error("unreachable: n classes always suffice"); // LCOV_EXCL_LINE
}

} // namespace dalpha
