#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rvar/bounds.hpp"
#include "rvar/graph.hpp"
#include "rvar/rational.hpp"

namespace rvar {

// Largest order the exhaustive search accepts.
inline constexpr int kMaxSearchOrder = 10;

// Degree-constrained graph class to search. k_min = 0 means no minimum-degree
// constraint. Full runs (no budget or time limit hit) produce results
// independent of the worker count; truncated runs come back flagged partial.
struct SearchSpec {
    int n = 0;
    int k_min = 0;
    std::optional<int> m_max;
    bool connected_only = true;
    bool exact_min_degree = false;            // restrict to minimum degree == k_min
    std::optional<long long> budget;          // cap on labeled class members examined
    double time_limit_seconds = 0.0;          // 0 = unlimited
    int workers = 1;
};

struct BoundComparison {
    bool applicable = false;  // a closed-form bound covers this class
    Rational bound;
    bool equal = false;       // empirical minimum equals the bound (full runs only)
};

struct SearchReport {
    SearchSpec spec;
    bool empty = false;                   // class has no members
    Rational minimum;                     // smallest variation index found
    std::vector<std::string> minimizers;  // canonical graph6, sorted
    long long class_size = 0;             // isomorphism classes examined
    long long labeled_explored = 0;       // labeled class members examined
    BoundComparison bound_comparison;
    bool partial = false;                 // stopped early: budget or time limit
    double elapsed_seconds = 0.0;
};

struct EnumerationOutcome {
    long long class_count = 0;
    long long labeled_explored = 0;
    bool partial = false;
};

// Visits exactly one canonically labeled representative per isomorphism
// class, in a deterministic order for a fixed spec. Runs sequentially.
EnumerationOutcome enumerate_class(const SearchSpec& spec,
                                   const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_class(const SearchSpec& spec);

// Exhaustive minimum of the variation index over the class, with all
// minimizers and the comparison against the applicable closed-form bound.
SearchReport min_variation(const SearchSpec& spec);

struct ProbeOptions {
    int workers = 1;
    std::optional<long long> budget;
    double time_limit_seconds = 0.0;
};

// Empirical test of the conjectured bound for n/2 < k <= n-2: searches the
// class, compares its minimum against the conjectured value, and checks
// whether every minimizer carries the predicted structure (p vertices of
// degree k whose complement is regular, the rest full degree). Parity
// classes settled by the established bound route through the same search
// with theorem_regime set.
struct ConjectureProbe {
    int n = 0;
    int k = 0;
    bool theorem_regime = false;
    std::vector<int> p_values;
    Rational conjectured;
    SearchReport search;
    bool minimum_matches = false;
    bool minimizers_in_family = false;
};

ConjectureProbe probe_conjecture(int n, int k, const ProbeOptions& opt = {});

}  // namespace rvar
