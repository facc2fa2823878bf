#pragma once

#include <cstdint>
#include <string>

#include "rvar/graph.hpp"

namespace rvar {

// Canonically relabeled copy of g: the lexicographically smallest adjacency
// encoding over all vertex orders compatible with an iterated degree
// refinement. Two graphs are isomorphic iff their canonical forms are equal.
Graph canonical_form(const Graph& g);

// graph6 line of the canonical form — the stable text fingerprint used to
// deduplicate and report isomorphism classes.
std::string canonical_graph6(const Graph& g);

// Canonical form packed into one integer (order plus upper-triangle bits);
// only orders up to 11 fit. Same equivalence guarantee as canonical_form.
uint64_t canonical_key(const Graph& g);

inline constexpr int kMaxKeyOrder = 11;

}  // namespace rvar
