#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rvar/graph.hpp"
#include "rvar/indices.hpp"
#include "rvar/rational.hpp"

namespace rvar {

// Which closed-form branch applies: "split" for minimum degree up to n/2
// (complete-split extremal), "half" above it (half-and-half extremal). At
// 2k = n both branches agree and split is reported.
enum class Regime { split, half };

struct FamilyParams {
    int n = 0;
    int p = 0;  // size of the carved-regular part
    int k = 0;
    std::optional<int> m;
};

// Names the construction predicted to attain the bound, and whether its
// regular gadget exists for these parities.
struct ExtremalDescriptor {
    std::string family;
    FamilyParams params;
    bool parity_feasible = false;
};

struct BoundQuery {
    int n = 0;
    int k = 0;
    std::optional<int> m;
};

struct BoundResult {
    Rational value;
    Regime regime = Regime::split;
    ExtremalDescriptor extremal;
};

// Closed-form lower bound on the variation index over graphs of order n with
// minimum degree >= k (and maximum degree <= m in the three-argument form).
// Split regime with m < n-k is not covered and raises a regime error.
BoundResult min_variation_bound(int n, int k);
BoundResult min_variation_bound(int n, int k, int m);
BoundResult min_variation_bound(const BoundQuery& q);

// Conjectured extremal sizes p for the regime n/2 < k <= n-2 where the
// half-and-half profile has bad parity. Parity classes already settled by the
// established equality cases come back with theorem_regime = true and p = n/2.
struct ConjecturedP {
    bool theorem_regime = false;
    std::vector<int> p_values;
};
ConjecturedP conjectured_extremal_p(int n, int k);

// n/2 - (1/2)(1/k - 1/(n-1)) p(n-p) with p taken from conjectured_extremal_p
// (both listed p give the same product).
Rational conjectured_bound(int n, int k);

// The gap functional: sum over degree pairs i <= j of (1/i - 1/j) x_{i,j}.
// Twice the distance of the variation index below n/2.
Rational degree_gap(const DegreeProfile& p);

// Both sides of that identity for a concrete graph with minimum degree >= 1:
// (direct edge sum, n/2 - gap/2). They must agree exactly.
std::pair<Rational, Rational> gap_identity(const Graph& g);

// Residuals of the counting constraints a genuine degree profile must
// satisfy. All-clear for every profile extracted from a real graph;
// synthetic profiles get their violations itemized, not thrown.
struct ConstraintReport {
    std::map<int, long long> row_residuals;  // degree-sum row, lhs - rhs per degree
    long long total_vertices_residual = 0;   // sum of vertex counts minus n
    std::vector<std::pair<int, int>> capacity_violations;   // x over available slots
    std::vector<int> negative_vertex_counts;
    std::vector<std::pair<int, int>> negative_edge_counts;

    bool all_clear() const {
        if (total_vertices_residual != 0) return false;
        if (!capacity_violations.empty() || !negative_vertex_counts.empty() ||
            !negative_edge_counts.empty())
            return false;
        for (auto& [deg, r] : row_residuals)
            if (r != 0) return false;
        return true;
    }
};
ConstraintReport check_profile(const DegreeProfile& p);

// Slack variables of the complemented model: for each pair of present
// degrees, how many edges are missing below the pair's capacity. Entries are
// kept even when zero. A profile violating a capacity bound is infeasible.
std::map<std::pair<int, int>, long long> complement_slacks(const DegreeProfile& p);

// Maximum of the product part of the gap after slack substitution, for the
// high-minimum-degree regime, with its attaining point (vertex counts for
// degrees k..n-1).
struct GapProductMax {
    Rational value;
    std::vector<Rational> point;
};
GapProductMax product_term_max(int n, int k);

// j-th leading principal minor of the Hessian of the reduced product term,
// by its closed-form product. Signs alternate starting negative, certifying
// concavity. The test suite checks this against a direct determinant.
Rational hessian_minor(int n, int k, int j);

// First-order conditions of the reduced product term at a given point
// (vertex counts for degrees k..n-2). The default point puts n/2 at degree k
// and zero elsewhere, and must zero out every residual.
std::vector<Rational> stationarity_residuals(int n, int k);
std::vector<Rational> stationarity_residuals(int n, int k, const std::vector<Rational>& point);

}  // namespace rvar
