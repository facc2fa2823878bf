#pragma once

#include <cstdint>

// Internal canonicalization core shared by the public wrappers and the hot
// loop of the class search. Works on raw adjacency masks to avoid per-call
// Graph construction.

namespace rvar::detail {

// Computes the canonical vertex order of the graph given by n adjacency
// masks. perm_out[t] receives the original vertex placed at position t.
// Returns the canonical upper-triangle bits packed column by column, earlier
// columns in higher bits — meaningful only for n <= 11 where they fit; the
// perm is valid for any supported order.
uint64_t canonical_core(const uint32_t* rows, int n, int* perm_out);

// Tags the bit stream with the order so keys of different orders never
// collide. Valid for n <= 11.
inline uint64_t pack_key(uint64_t stream, int n) {
    return (uint64_t(n) << 55) | stream;
}

}  // namespace rvar::detail
