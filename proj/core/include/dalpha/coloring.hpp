#pragma once

#include <vector>

#include "dalpha/digraph.hpp"

namespace dalpha {

/// Partition of the vertex set into classes 0..num_classes-1, each
/// inducing an acyclic subdigraph.
struct Coloring {
    int num_classes = 0;
    std::vector<int> classes; // classes[v] in [0, num_classes)
};

/// Dichromatic number with a witness partition: the least k admitting
/// an acyclic k-partition. Exact branch and bound, capped at n <= 10
/// (throws SizeCap beyond that).
Coloring dichromatic_number(const Digraph& g);

} // namespace dalpha
