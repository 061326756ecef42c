#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "dalpha/digraph.hpp"

namespace dalpha {

/// Labeled digraphs on n vertices are encoded as arc bitmasks: slot
/// u*(n-1) + (v, skipping v == u) holds arc (u,v), so masks enumerate
/// all 2^(n(n-1)) digraphs in lexicographic arc order. n <= 8 keeps
/// every mask inside 56 bits.
int arc_slots(int n);
int arc_slot(int n, int u, int v);
Arc slot_arc(int n, int slot);

std::uint64_t arc_mask(const Digraph& g); // SizeCap for n > 8
Digraph digraph_from_mask(int n, std::uint64_t mask);

/// Strong connectivity straight off the bitmask by forward and
/// backward closure from vertex 0. Deliberately not Tarjan: the
/// enumeration filter and the Digraph-level check stay independent
/// so each can recount the other.
bool mask_strongly_connected(int n, std::uint64_t mask);

/// Effective enumeration cap. Default 5; the override flag raises it
/// to 6; the DALPHA_MAX_N environment variable, when set, replaces
/// both (values outside [2,6] are refused with InvalidParams).
int enumeration_cap(bool allow_n6 = false);

/// Calls fn(mask) for every strongly connected digraph on n vertices
/// with mask in [first, last), in increasing mask order. This is the
/// sharding primitive: shards split [0, 2^arc_slots(n)) into
/// intervals and merge their results afterwards.
void enumerate_sc_range(int n, std::uint64_t first, std::uint64_t last,
                        const std::function<void(std::uint64_t)>& fn);

/// Full range. Throws InvalidParams (n < 2) or SizeCap (n above cap).
void enumerate_sc(int n, const std::function<void(std::uint64_t)>& fn,
                  bool allow_n6 = false);

std::uint64_t count_sc(int n, bool allow_n6 = false);

/// Uniform over strongly connected digraphs on n vertices (rejection
/// sampling over arc subsets). n <= 8. If exclude_complete is set the
/// complete digraph is rejected too, so a missing arc always exists.
std::uint64_t random_sc_mask(int n, std::mt19937_64& rng,
                             bool exclude_complete = false);

} // namespace dalpha
