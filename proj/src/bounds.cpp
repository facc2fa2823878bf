#include "rvar/bounds.hpp"

#include <algorithm>
#include <set>

#include "rvar/errors.hpp"

namespace rvar {

namespace {

void check_nk(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw input_error("bound: need 1 <= k <= n-1, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
}

// Shared core: the bound with 1/m_eff in place of the max-degree reciprocal;
// m_eff = n-1 when no maximum-degree cap is given.
BoundResult bound_core(int n, int k, int m_eff, bool capped) {
    Rational coeff = Rational(1, k) - Rational(1, m_eff);
    BoundResult r;
    if (2 * k <= n) {
        r.regime = Regime::split;
        if (capped && m_eff < n - k)
            throw regime_error("bound: split regime needs m >= n-k (not covered below)");
        r.value = Rational(n, 2) - coeff * Rational(1LL * k * (n - k), 2);
        if (!capped) {
            r.extremal.family = "complete_split";
            r.extremal.params = {n, n - k, k, std::nullopt};
            r.extremal.parity_feasible = true;  // the clique gadget always exists
        } else {
            r.extremal.family = "kn_minus_two_regular";
            r.extremal.params = {n, n - k, k, m_eff};
            // first gadget is complete; second is (n-m-1)-regular on k vertices
            r.extremal.parity_feasible = (1LL * k * (n - m_eff - 1)) % 2 == 0;
        }
    } else {
        r.regime = Regime::half;
        r.value = Rational(n, 2) - coeff * Rational(1LL * n * n, 8);
        r.extremal.family = capped ? "kn_minus_two_regular" : "kn_minus_regular";
        r.extremal.params = {n, n / 2, k, capped ? std::optional<int>(m_eff) : std::nullopt};
        bool ok = n % 2 == 0 && (1LL * (n / 2) * (n - k - 1)) % 2 == 0;
        if (capped) ok = ok && (1LL * (n / 2) * (n - m_eff - 1)) % 2 == 0;
        r.extremal.parity_feasible = ok;
    }
    return r;
}

}  // namespace

BoundResult min_variation_bound(int n, int k) {
    check_nk(n, k);
    return bound_core(n, k, n - 1, false);
}

BoundResult min_variation_bound(int n, int k, int m) {
    check_nk(n, k);
    if (m < k || m > n - 1)
        throw input_error("bound: need k <= m <= n-1, got m=" + std::to_string(m));
    return bound_core(n, k, m, m != n - 1);
}

BoundResult min_variation_bound(const BoundQuery& q) {
    return q.m ? min_variation_bound(q.n, q.k, *q.m) : min_variation_bound(q.n, q.k);
}

ConjecturedP conjectured_extremal_p(int n, int k) {
    if (2 * k <= n || k > n - 2)
        throw input_error("conjectured_extremal_p: need n/2 < k <= n-2");
    ConjecturedP out;
    const bool k_even = k % 2 == 0;
    switch (n % 4) {
        case 0:
            out.theorem_regime = true;
            break;
        case 1:
            out.p_values = k_even ? std::vector<int>{(n - 1) / 2, (n + 1) / 2}
                                  : std::vector<int>{(n - 1) / 2};
            break;
        case 2:
            if (k_even)
                out.p_values = {(n - 2) / 2, (n + 2) / 2};
            else
                out.theorem_regime = true;
            break;
        default:  // n % 4 == 3
            out.p_values = k_even ? std::vector<int>{(n - 1) / 2, (n + 1) / 2}
                                  : std::vector<int>{(n + 1) / 2};
            break;
    }
    if (out.theorem_regime) out.p_values = {n / 2};
    return out;
}

Rational conjectured_bound(int n, int k) {
    ConjecturedP cp = conjectured_extremal_p(n, k);
    long long p = cp.p_values.front();
    return Rational(n, 2) -
           (Rational(1, k) - Rational(1, n - 1)) * Rational(p * (n - p), 2);
}

Rational degree_gap(const DegreeProfile& prof) {
    Rational total(0);
    for (auto& [pair, count] : prof.edge_counts) {
        auto [i, j] = pair;
        if (count == 0 || i == j) continue;
        if (i <= 0)
            throw input_error("degree_gap: edge count at degree 0");
        total += (Rational(1, i) - Rational(1, j)) * Rational(count);
    }
    return total;
}

std::pair<Rational, Rational> gap_identity(const Graph& g) {
    if (g.min_degree() < 1)
        throw regime_error("gap_identity: requires minimum degree >= 1");
    Rational direct = variation_randic(g);
    Rational via_gap = Rational(g.order(), 2) - degree_gap(degree_profile(g)) / Rational(2);
    return {direct, via_gap};
}

ConstraintReport check_profile(const DegreeProfile& prof) {
    ConstraintReport rep;
    std::set<int> degrees;
    for (auto& [deg, c] : prof.vertex_counts) degrees.insert(deg);
    for (auto& [pair, c] : prof.edge_counts) {
        degrees.insert(pair.first);
        degrees.insert(pair.second);
    }

    long long vertex_total = 0;
    for (auto& [deg, c] : prof.vertex_counts) {
        vertex_total += c;
        if (c < 0) rep.negative_vertex_counts.push_back(deg);
    }
    rep.total_vertices_residual = vertex_total - prof.n;

    for (int i : degrees) {
        long long lhs = 2 * prof.edge_count(i, i);
        for (int j : degrees)
            if (j != i) lhs += prof.edge_count(i, j);
        rep.row_residuals[i] = lhs - 1LL * i * prof.vertex_count(i);
    }

    for (auto& [pair, c] : prof.edge_counts) {
        auto [i, j] = pair;
        if (c < 0) rep.negative_edge_counts.push_back(pair);
        long long ni = prof.vertex_count(i);
        long long capacity = i == j ? ni * (ni - 1) / 2 : ni * prof.vertex_count(j);
        if (c > capacity) rep.capacity_violations.push_back(pair);
    }
    return rep;
}

std::map<std::pair<int, int>, long long> complement_slacks(const DegreeProfile& prof) {
    // every edge count must sit at a degree pair that actually has vertices
    for (auto& [pair, c] : prof.edge_counts)
        if (c != 0 && (prof.vertex_count(pair.first) == 0 || prof.vertex_count(pair.second) == 0))
            throw input_error("complement_slacks: edges between absent degree classes");

    std::map<std::pair<int, int>, long long> slacks;
    for (auto it = prof.vertex_counts.begin(); it != prof.vertex_counts.end(); ++it) {
        for (auto jt = it; jt != prof.vertex_counts.end(); ++jt) {
            int i = it->first, j = jt->first;
            long long ni = it->second, nj = jt->second;
            long long capacity = i == j ? ni * (ni - 1) / 2 : ni * nj;
            long long y = capacity - prof.edge_count(i, j);
            if (y < 0)
                throw feasibility_error("complement_slacks: edge count exceeds capacity at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
            slacks[{i, j}] = y;
        }
    }
    return slacks;
}

GapProductMax product_term_max(int n, int k) {
    if (n < 3 || k < 1 || k > n - 2)
        throw input_error("product_term_max: need 1 <= k <= n-2");
    if (2 * k < n)
        throw regime_error("product_term_max: stated only for k >= n/2");
    GapProductMax out;
    out.value = Rational(1LL * n * n, 4) * (Rational(1, k) - Rational(1, n - 1));
    out.point.assign(n - k, Rational(0));
    out.point.front() = Rational(n, 2);  // degree k
    out.point.back() = Rational(n, 2);   // degree n-1
    return out;
}

Rational hessian_minor(int n, int k, int j) {
    if (n < 3 || k < 1 || k > n - 2)
        throw input_error("hessian_minor: need 1 <= k <= n-2");
    if (j < 1 || j > n - k - 1)
        throw input_error("hessian_minor: need 1 <= j <= n-k-1");
    Rational prod(1);
    for (int t = 0; t + 1 <= j - 1; ++t)
        prod *= Rational(1, k + t) - Rational(1, k + t + 1);
    prod *= Rational(1, k + j - 1) - Rational(1, n - 1);
    Rational scale(j % 2 == 0 ? 1 : -1);
    for (int t = 0; t < j; ++t) scale *= Rational(2);
    return scale * prod;
}

std::vector<Rational> stationarity_residuals(int n, int k) {
    if (n < 3 || k < 1 || k > n - 2)
        throw input_error("stationarity_residuals: need 1 <= k <= n-2");
    std::vector<Rational> point(n - k - 1, Rational(0));
    point.front() = Rational(n, 2);
    return stationarity_residuals(n, k, point);
}

std::vector<Rational> stationarity_residuals(int n, int k, const std::vector<Rational>& point) {
    if (n < 3 || k < 1 || k > n - 2)
        throw input_error("stationarity_residuals: need 1 <= k <= n-2");
    if (2 * k < n)
        throw regime_error("stationarity_residuals: stated only for k >= n/2");
    const int len = n - k - 1;  // vertex counts for degrees k..n-2
    if (int(point.size()) != len)
        throw input_error("stationarity_residuals: point must have n-k-1 entries");

    auto a = [&](int i) { return Rational(1, i) - Rational(1, n - 1); };
    std::vector<Rational> res(len);
    for (int idx = 0; idx < len; ++idx) {
        int i = k + idx;
        Rational r = Rational(n) * a(i) - Rational(2) * a(i) * point[idx];
        for (int jdx = 0; jdx < idx; ++jdx) r -= Rational(2) * a(i) * point[jdx];
        for (int jdx = idx + 1; jdx < len; ++jdx) r -= Rational(2) * a(k + jdx) * point[jdx];
        res[idx] = r;
    }
    return res;
}

}  // namespace rvar
