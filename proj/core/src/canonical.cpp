#include "dalpha/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "dalpha/enumerate.hpp"
#include "dalpha/errors.hpp"

namespace dalpha {

std::uint64_t canonical_key(int n, std::uint64_t mask) {
    if (n < 1 || n > 8)
        throw SizeCap("canonical_key is brute force over n! relabelings, capped at n <= 8");
    int slots = arc_slots(n);
    std::array<Arc, 56> arc_of_slot;
    for (int s = 0; s < slots; ++s) arc_of_slot[s] = slot_arc(n, s);

    std::array<int, 8> perm;
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t relabeled = 0;
        for (int s = 0; s < slots; ++s)
            if (mask >> s & 1) {
                auto [u, v] = arc_of_slot[s];
                relabeled |= std::uint64_t{1} << arc_slot(n, perm[u], perm[v]);
            }
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

std::uint64_t canonical_key(const Digraph& g) {
    return canonical_key(g.num_vertices(), arc_mask(g));
}

} // namespace dalpha
