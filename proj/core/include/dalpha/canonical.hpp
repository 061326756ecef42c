#pragma once

#include <cstdint>

#include "dalpha/digraph.hpp"

namespace dalpha {

/// Isomorphism-class key: the smallest arc bitmask reachable by any
/// of the n! vertex relabelings. Brute force, which is fine at the
/// enumeration scale this project runs at; capped at n <= 8
/// (SizeCap). Two digraphs share a key iff they are isomorphic.
std::uint64_t canonical_key(const Digraph& g);
std::uint64_t canonical_key(int n, std::uint64_t mask);

} // namespace dalpha
