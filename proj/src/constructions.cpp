#include "rvar/constructions.hpp"

#include <algorithm>
#include <string>

#include "rvar/errors.hpp"

namespace rvar {

Graph complete_split(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw input_error("complete_split: need 1 <= k <= n-1, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    Graph g(n);
    const int split = n - k;  // vertices 0..split-1 independent, split..n-1 clique
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (v >= split) g.add_edge(u, v);
    return g;
}

Graph regular_graph(int p, int d) {
    if (p < 1 || d < 0)
        throw input_error("regular_graph: need p >= 1 and d >= 0");
    if (d > p - 1 || (p % 2 != 0 && d % 2 != 0))
        throw feasibility_error("regular_graph: no " + std::to_string(d) + "-regular graph on " +
                                std::to_string(p) + " vertices");
    Graph g(p);
    for (int off = 1; off <= d / 2; ++off)
        for (int v = 0; v < p; ++v) g.add_edge(v, (v + off) % p);
    if (d % 2 != 0)
        for (int v = 0; v < p / 2; ++v) g.add_edge(v, v + p / 2);
    return g;
}

namespace {

// Removes from g the edges of a d-regular graph on the order-r vertex window
// starting at base.
void carve_regular(Graph& g, int base, int r, int d) {
    if (r == 0 && d <= 0) return;
    Graph gadget = regular_graph(r, d);
    for (auto [u, v] : gadget.edges()) g.remove_edge(base + u, base + v);
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

Graph kn_minus_regular(int n, int p, int k) {
    if (n < 1 || p < 0 || p > n || k < 1 || k > n - 1)
        throw input_error("kn_minus_regular: need 0 <= p <= n and 1 <= k <= n-1");
    Graph g = complete_graph(n);
    if (p > 0 && k < n - 1) carve_regular(g, 0, p, n - k - 1);
    return g;
}

Graph kn_minus_two_regular(int n, int p, int k, int m) {
    if (n < 1 || p < 0 || p > n || k < 1 || k > n - 1 || m < k || m > n - 1)
        throw input_error("kn_minus_two_regular: need 0 <= p <= n and 1 <= k <= m <= n-1");
    Graph g = complete_graph(n);
    if (p > 0 && k < n - 1) carve_regular(g, 0, p, n - k - 1);
    if (p < n && m < n - 1) carve_regular(g, p, n - p, n - m - 1);
    return g;
}

ExtremalProfile extremal_profile(int n, int k) { return extremal_profile(n, k, n - 1); }

ExtremalProfile extremal_profile(int n, int k, int m) {
    if (n < 3 || k < 1 || k > n - 2)
        throw input_error("extremal_profile: need 1 <= k <= n-2");
    if (m < k || m > n - 1)
        throw input_error("extremal_profile: need k <= m <= n-1");

    // Accumulate predicted counts exactly, merging buckets first (k = m makes
    // the two degree classes coincide), then insist every merged count is a
    // non-negative integer.
    std::map<int, Rational> vertices;
    std::map<std::pair<int, int>, Rational> edges;
    auto edge_key = [](int i, int j) { return std::make_pair(std::min(i, j), std::max(i, j)); };

    if (2 * k <= n) {
        // low minimum degree: an independent set of size n-k completely
        // joined to a maximum-degree side of size k
        if (m < n - k)
            throw regime_error("extremal_profile: maximum degree below n-k has no split profile");
        vertices[k] += Rational(n - k);
        vertices[m] += Rational(k);
        edges[edge_key(k, m)] += Rational(1LL * (n - k) * k);
        edges[edge_key(m, m)] += Rational(1LL * k * (k + m - n), 2);
    } else {
        // high minimum degree: half the vertices at each degree extreme
        vertices[k] += Rational(n, 2);
        vertices[m] += Rational(n, 2);
        edges[edge_key(k, k)] += Rational(1LL * n * (2 * k - n), 8);
        edges[edge_key(k, m)] += Rational(1LL * n * n, 4);
        edges[edge_key(m, m)] += Rational(1LL * n * (2 * m - n), 8);
    }

    ExtremalProfile out;
    for (auto& [deg, c] : vertices)
        if (!c.is_integer() || c.num() < 0) return out;
    for (auto& [pair, c] : edges)
        if (!c.is_integer() || c.num() < 0) return out;

    out.parity_feasible = true;
    out.profile.n = n;
    out.profile.min_degree = k;
    for (auto& [deg, c] : vertices)
        if (c.num() != 0) out.profile.vertex_counts[deg] = c.num();
    for (auto& [pair, c] : edges)
        if (c.num() != 0) out.profile.edge_counts[pair] = c.num();
    return out;
}

}  // namespace rvar
