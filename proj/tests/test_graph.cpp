#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rvar/errors.hpp"
#include "rvar/graph.hpp"
#include "rvar/indices.hpp"
#include "rvar/rational.hpp"
#include "test_util.hpp"

using rvar::Graph;
using rvar::Rational;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

}  // namespace

TEST_CASE("rational arithmetic normalizes and compares exactly") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(9, 5).str() == "9/5");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(4, 2).fraction_str() == "2/1");
    CHECK(Rational(3, 2).to_double() == doctest::Approx(1.5));
    CHECK(Rational(10, 5).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic reports 64-bit overflow instead of wrapping") {
    Rational big(1, 3037000499LL);
    CHECK_THROWS_AS(big * big * big, std::overflow_error);
}

TEST_CASE("graph construction and mutation") {
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    g.remove_edge(0, 1);
    CHECK(!g.adjacent(0, 1));
    CHECK(g.edge_count() == 1);

    CHECK_THROWS_AS(Graph(0), rvar::input_error);
    CHECK_THROWS_AS(Graph(rvar::kMaxOrder + 1), rvar::input_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), rvar::input_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), rvar::input_error);
}

TEST_CASE("degree summaries and connectivity") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.min_degree() == 1);
    CHECK(p4.max_degree() == 2);
    CHECK(p4.degree_sequence() == std::vector<int>{1, 2, 2, 1});
    CHECK(p4.is_connected());

    Graph two_parts = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(!two_parts.is_connected());

    CHECK(Graph(1).is_connected());
    CHECK(!Graph(2).is_connected());
}

TEST_CASE("complement swaps edges and non-edges") {
    Graph c5 = cycle(5);
    Graph co = c5.complement();
    CHECK(co.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(co.degree(v) == 2);
    CHECK(co.complement() == c5);
    CHECK(are_isomorphic_bruteforce(co, c5));  // C5 is self-complementary
    CHECK(complete(4).complement() == Graph(4));
}

TEST_CASE("graph6 encodes known graphs") {
    CHECK(rvar::to_graph6(complete(4)) == "C~");
    CHECK(rvar::to_graph6(cycle(5)) == "Dhc");
    CHECK(rvar::from_graph6("C~") == complete(4));
    CHECK(rvar::from_graph6(">>graph6<<C~") == complete(4));
}

TEST_CASE("graph6 round-trips random graphs") {
    std::mt19937 rng(12021);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 14)(rng);
        Graph g = n == 1 ? Graph(1) : random_connected_graph(n, rng);
        CHECK(rvar::from_graph6(rvar::to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed lines") {
    CHECK_THROWS_AS(rvar::from_graph6(""), rvar::input_error);
    CHECK_THROWS_AS(rvar::from_graph6("C"), rvar::input_error);       // truncated
    CHECK_THROWS_AS(rvar::from_graph6("C~~"), rvar::input_error);     // trailing data
    CHECK_THROWS_AS(rvar::from_graph6("C\x1f?"), rvar::input_error);  // char below range
    CHECK_THROWS_AS(rvar::from_graph6("~??"), rvar::input_error);     // order beyond cap
}

TEST_CASE("edge list round-trips and rejects garbage") {
    Graph c5 = cycle(5);
    CHECK(rvar::from_edge_list(rvar::to_edge_list(c5)) == c5);
    CHECK(rvar::from_edge_list("5; 0-1,1-2,2-3,3-4,0-4") == c5);
    CHECK(rvar::from_edge_list("3;") == Graph(3));
    CHECK_THROWS_AS(rvar::from_edge_list("5; 0-9"), rvar::input_error);
    CHECK_THROWS_AS(rvar::from_edge_list("5; 0+1"), rvar::input_error);
    CHECK_THROWS_AS(rvar::from_edge_list("x; 0-1"), rvar::input_error);
}

TEST_CASE("variation index on known graphs") {
    CHECK(rvar::variation_randic(cycle(5)) == Rational(5, 2));
    CHECK(rvar::variation_randic(complete(4)) == Rational(2));
    CHECK(rvar::variation_randic(star(5)) == Rational(1));
    CHECK(rvar::variation_randic(Graph(3)) == Rational(0));
    // P4: end edges 1/2 each, middle edge 1/2
    CHECK(rvar::variation_randic(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) ==
          Rational(3, 2));
}

TEST_CASE("classic and general indices on known graphs") {
    CHECK(rvar::randic(complete(4)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rvar::randic(star(5)) == doctest::Approx(2.0).epsilon(1e-12));  // 4/sqrt(4)
    CHECK(rvar::randic(cycle(6)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rvar::general_randic(complete(4), 1.0) == doctest::Approx(54.0));
    CHECK(rvar::general_randic(cycle(5), -1.0) == doctest::Approx(5.0 / 4.0));
    std::mt19937 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_connected_graph(std::uniform_int_distribution<int>(2, 10)(rng), rng);
        CHECK(rvar::general_randic(g, -0.5) == doctest::Approx(rvar::randic(g)).epsilon(1e-12));
    }
}

TEST_CASE("variation index never exceeds the classic index") {
    // 1/max(a,b) <= 1/sqrt(ab) termwise
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_connected_graph(std::uniform_int_distribution<int>(2, 12)(rng), rng);
        CHECK(rvar::variation_randic(g).to_double() <= rvar::randic(g) + 1e-12);
    }
}

TEST_CASE("degree profile tallies vertices and edges by degree") {
    rvar::DegreeProfile p = rvar::degree_profile(star(4));
    CHECK(p.n == 4);
    CHECK(p.min_degree == 1);
    CHECK(p.vertex_count(1) == 3);
    CHECK(p.vertex_count(3) == 1);
    CHECK(p.vertex_count(2) == 0);
    CHECK(p.edge_count(1, 3) == 3);
    CHECK(p.edge_count(3, 1) == 3);  // unordered lookup
    CHECK(p.vertex_counts.size() == 2);
    CHECK(p.edge_counts.size() == 1);

    rvar::DegreeProfile q = rvar::degree_profile(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(q.edge_count(1, 2) == 2);
    CHECK(q.edge_count(2, 2) == 1);
}
