#pragma once

#include <map>
#include <utility>

#include "rvar/graph.hpp"
#include "rvar/rational.hpp"

namespace rvar {

// Aggregate degree data of a graph: how many vertices carry each degree and
// how many edges join each (unordered) degree pair.  Zero counts are omitted.
struct DegreeProfile {
    int n = 0;
    int min_degree = 0;  // observed minimum degree; meaningful only when n > 0
    std::map<int, long long> vertex_counts;                // degree -> count
    std::map<std::pair<int, int>, long long> edge_counts;  // {i<=j} -> count

    long long vertex_count(int i) const {
        auto it = vertex_counts.find(i);
        return it == vertex_counts.end() ? 0 : it->second;
    }
    long long edge_count(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = edge_counts.find({i, j});
        return it == edge_counts.end() ? 0 : it->second;
    }
};

// Sum over edges of 1/max(d(u), d(v)), computed exactly.  Zero if edgeless.
Rational variation_randic(const Graph& g);

// Classic connectivity index: sum over edges of 1/sqrt(d(u) d(v)).
double randic(const Graph& g);

// Generalized form: sum over edges of (d(u) d(v))^alpha.
double general_randic(const Graph& g, double alpha);

DegreeProfile degree_profile(const Graph& g);

}  // namespace rvar
