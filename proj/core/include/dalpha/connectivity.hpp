#pragma once

#include "dalpha/digraph.hpp"

namespace dalpha {

struct VertexConnectivity {
    int value = 0;
    /// Complete digraphs have no vertex cut; value is then n-1 by the
    /// usual convention and this flag records why.
    bool is_complete = false;
};

/// Strong vertex connectivity via max-flow on the split digraph,
/// minimised over ordered non-adjacent pairs. 0 when not strongly
/// connected.
VertexConnectivity vertex_connectivity(const Digraph& g);

/// Strong arc connectivity: unit-capacity max-flow between a fixed
/// root and every other vertex, both directions. 0 when not strongly
/// connected.
int arc_connectivity(const Digraph& g);

} // namespace dalpha
