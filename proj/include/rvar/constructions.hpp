#pragma once

#include "rvar/graph.hpp"
#include "rvar/indices.hpp"

namespace rvar {

// Complete split graph: a clique of size k joined completely to an
// independent set of size n-k. The clique occupies the highest-numbered
// vertices so serialized output is byte-stable. Degrees: n-k vertices of
// degree k, k vertices of degree n-1.
Graph complete_split(int n, int k);

// Deterministic d-regular graph on p vertices (circulant: offsets 1..d/2,
// plus the antipodal offset p/2 when d is odd). Exists iff 0 <= d <= p-1 and
// p*d is even; otherwise a feasibility error is thrown.
Graph regular_graph(int p, int d);

// Complete graph on n vertices minus the edges of an (n-k-1)-regular graph
// placed on vertices 0..p-1. Degrees: p vertices of degree k, n-p of degree
// n-1. p = 0 (or k = n-1) leaves the complete graph untouched.
Graph kn_minus_regular(int n, int p, int k);

// Complete graph minus an (n-k-1)-regular graph on vertices 0..p-1 and an
// (n-m-1)-regular graph on vertices p..n-1. Degrees: p vertices of degree k,
// n-p of degree m. m = n-1 degenerates to kn_minus_regular.
Graph kn_minus_two_regular(int n, int p, int k, int m);

// Predicted minimizing degree profile for graphs with minimum degree >= k
// (and maximum degree <= m when given). Some parameter classes make the
// predicted counts non-integral; those come back flagged infeasible with an
// empty profile rather than rounded.
struct ExtremalProfile {
    bool parity_feasible = false;
    DegreeProfile profile;
};

ExtremalProfile extremal_profile(int n, int k);
ExtremalProfile extremal_profile(int n, int k, int m);

}  // namespace rvar
