#include "rvar/indices.hpp"

#include <algorithm>
#include <cmath>

namespace rvar {

Rational variation_randic(const Graph& g) {
    Rational total(0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                total = total + Rational(1, std::max(g.degree(u), g.degree(v)));
    return total;
}

double randic(const Graph& g) {
    double total = 0.0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                total += 1.0 / std::sqrt(double(g.degree(u)) * double(g.degree(v)));
    return total;
}

double general_randic(const Graph& g, double alpha) {
    double total = 0.0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                total += std::pow(double(g.degree(u)) * double(g.degree(v)), alpha);
    return total;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.n = g.order();
    auto degs = g.degree_sequence();
    p.min_degree = *std::min_element(degs.begin(), degs.end());
    for (int v = 0; v < g.order(); ++v) p.vertex_counts[degs[v]]++;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) {
                int i = std::min(degs[u], degs[v]);
                int j = std::max(degs[u], degs[v]);
                p.edge_counts[{i, j}]++;
            }
    return p;
}

}  // namespace rvar
