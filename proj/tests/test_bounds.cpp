#include <random>
#include <vector>

#include "doctest.h"
#include "rvar/bounds.hpp"
#include "rvar/constructions.hpp"
#include "rvar/errors.hpp"
#include "rvar/graph.hpp"
#include "rvar/indices.hpp"
#include "rvar/rational.hpp"
#include "test_util.hpp"

using rvar::Graph;
using rvar::Rational;

TEST_CASE("split-regime bound values") {
    CHECK(rvar::min_variation_bound(6, 2).value == Rational(9, 5));
    CHECK(rvar::min_variation_bound(7, 2).value == Rational(11, 6));
    CHECK(rvar::min_variation_bound(7, 3).value == Rational(5, 2));
    CHECK(rvar::min_variation_bound(8, 4).value == Rational(22, 7));

    rvar::BoundResult b = rvar::min_variation_bound(6, 2);
    CHECK(b.regime == rvar::Regime::split);
    CHECK(b.extremal.family == "complete_split");
    CHECK(b.extremal.params.n == 6);
    CHECK(b.extremal.params.p == 4);
    CHECK(b.extremal.params.k == 2);
    CHECK(b.extremal.parity_feasible);

    // boundary 2k = n reports split, and both formulas agree there
    rvar::BoundResult mid = rvar::min_variation_bound(6, 3);
    CHECK(mid.value == Rational(12, 5));
    CHECK(mid.regime == rvar::Regime::split);
    CHECK(mid.value == Rational(6, 2) - (Rational(1, 3) - Rational(1, 5)) * Rational(36, 8));
}

TEST_CASE("half-regime bound values") {
    rvar::BoundResult b = rvar::min_variation_bound(8, 5);
    CHECK(b.value == Rational(124, 35));
    CHECK(b.regime == rvar::Regime::half);
    CHECK(b.extremal.family == "kn_minus_regular");
    CHECK(b.extremal.params.p == 4);
    CHECK(b.extremal.parity_feasible);

    CHECK(rvar::min_variation_bound(9, 5).value == Rational(1197, 320));

    // n = 2 mod 4 with k even: profile exists only fractionally
    rvar::BoundResult infeasible = rvar::min_variation_bound(6, 4);
    CHECK(infeasible.value == Rational(111, 40));
    CHECK(!infeasible.extremal.parity_feasible);
}

TEST_CASE("bound endpoints") {
    CHECK(rvar::min_variation_bound(2, 1).value == Rational(1));
    CHECK(rvar::min_variation_bound(5, 4).value == Rational(5, 2));  // k = n-1: K_n itself
    CHECK(rvar::min_variation_bound(6, 5).value == Rational(3));
    CHECK_THROWS_AS(rvar::min_variation_bound(6, 0), rvar::input_error);
    CHECK_THROWS_AS(rvar::min_variation_bound(6, 6), rvar::input_error);
    CHECK_THROWS_AS(rvar::min_variation_bound(1, 1), rvar::input_error);
}

TEST_CASE("capped bound values") {
    rvar::BoundResult b = rvar::min_variation_bound(6, 2, 4);
    CHECK(b.value == Rational(2));
    CHECK(b.regime == rvar::Regime::split);
    CHECK(b.extremal.family == "kn_minus_two_regular");
    CHECK(b.extremal.params.m == 4);
    CHECK(b.extremal.parity_feasible);

    rvar::BoundResult h = rvar::min_variation_bound(8, 4, 5);
    CHECK(h.value == Rational(18, 5));
    CHECK(h.regime == rvar::Regime::split);  // 2k = n sits on the boundary; split wins
    CHECK(h.extremal.parity_feasible);
    CHECK(rvar::variation_randic(rvar::kn_minus_two_regular(8, 4, 4, 5)) == Rational(18, 5));

    CHECK(rvar::min_variation_bound(7, 3, 4).value == Rational(3));
    CHECK(rvar::variation_randic(rvar::kn_minus_two_regular(7, 4, 3, 4)) == Rational(3));

    // m = n-1 reduces to the uncapped bound
    rvar::BoundResult red = rvar::min_variation_bound(6, 2, 5);
    CHECK(red.value == rvar::min_variation_bound(6, 2).value);
    CHECK(red.extremal.family == "complete_split");

    CHECK_THROWS_AS(rvar::min_variation_bound(8, 2, 4), rvar::regime_error);
    CHECK_THROWS_AS(rvar::min_variation_bound(6, 3, 2), rvar::input_error);
    CHECK_THROWS_AS(rvar::min_variation_bound(6, 3, 6), rvar::input_error);

    rvar::BoundQuery q{8, 4, 5};
    CHECK(rvar::min_variation_bound(q).value == Rational(18, 5));
    rvar::BoundQuery q2{8, 4, std::nullopt};
    CHECK(rvar::min_variation_bound(q2).value == Rational(22, 7));
}

TEST_CASE("bound grows with the minimum degree") {
    for (int n = 3; n <= 14; ++n) {
        Rational prev = rvar::min_variation_bound(n, 1).value;
        for (int k = 2; k <= n - 1; ++k) {
            Rational cur = rvar::min_variation_bound(n, k).value;
            CHECK(prev < cur);
            prev = cur;
        }
    }
}

TEST_CASE("constructed extremal graphs attain the bound whenever parity allows") {
    for (int n = 3; n <= 14; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            rvar::BoundResult b = rvar::min_variation_bound(n, k);
            if (!b.extremal.parity_feasible) continue;
            Graph g = b.extremal.family == "complete_split"
                          ? rvar::complete_split(n, k)
                          : rvar::kn_minus_regular(n, b.extremal.params.p, k);
            CHECK(rvar::variation_randic(g) == b.value);
        }
}

TEST_CASE("conjectured extremal part sizes by residue") {
    rvar::ConjecturedP c = rvar::conjectured_extremal_p(9, 6);
    CHECK(!c.theorem_regime);
    CHECK(c.p_values == std::vector<int>{4, 5});
    CHECK(rvar::conjectured_extremal_p(9, 5).p_values == std::vector<int>{4});
    CHECK(rvar::conjectured_extremal_p(10, 6).p_values == std::vector<int>{4, 6});
    CHECK(rvar::conjectured_extremal_p(13, 8).p_values == std::vector<int>{6, 7});
    CHECK(rvar::conjectured_extremal_p(11, 6).p_values == std::vector<int>{5, 6});
    CHECK(rvar::conjectured_extremal_p(11, 7).p_values == std::vector<int>{6});
    CHECK(rvar::conjectured_extremal_p(6, 4).p_values == std::vector<int>{2, 4});
    CHECK(rvar::conjectured_extremal_p(7, 4).p_values == std::vector<int>{3, 4});
    CHECK(rvar::conjectured_extremal_p(7, 5).p_values == std::vector<int>{4});

    rvar::ConjecturedP t = rvar::conjectured_extremal_p(10, 7);
    CHECK(t.theorem_regime);
    CHECK(t.p_values == std::vector<int>{5});
    CHECK(rvar::conjectured_extremal_p(12, 7).theorem_regime);

    CHECK_THROWS_AS(rvar::conjectured_extremal_p(7, 3), rvar::input_error);
    CHECK_THROWS_AS(rvar::conjectured_extremal_p(10, 5), rvar::input_error);  // k = n/2
    CHECK_THROWS_AS(rvar::conjectured_extremal_p(8, 7), rvar::input_error);
}

TEST_CASE("conjectured bound values") {
    CHECK(rvar::conjectured_bound(7, 4) == Rational(3));
    CHECK(rvar::conjectured_bound(7, 5) == Rational(33, 10));
    CHECK(rvar::conjectured_bound(9, 5) == Rational(15, 4));
    CHECK(rvar::conjectured_bound(6, 4) == Rational(14, 5));
    // listed part sizes give the same value
    for (int p : rvar::conjectured_extremal_p(9, 6).p_values)
        CHECK(rvar::conjectured_bound(9, 6) ==
              Rational(9, 2) - (Rational(1, 6) - Rational(1, 8)) * Rational(1LL * p * (9 - p), 2));
    // theorem regime reproduces the established bound
    CHECK(rvar::conjectured_bound(10, 7) == rvar::min_variation_bound(10, 7).value);
    CHECK(rvar::conjectured_bound(12, 7) == rvar::min_variation_bound(12, 7).value);
    // conjectured value never undercuts the proved bound
    for (int n = 5; n <= 14; ++n)
        for (int k = n / 2 + 1; k <= n - 2; ++k)
            CHECK(rvar::conjectured_bound(n, k) >= rvar::min_variation_bound(n, k).value);
}

TEST_CASE("degree gap of concrete profiles") {
    CHECK(rvar::degree_gap(rvar::degree_profile(rvar::complete_split(6, 2))) == Rational(12, 5));
    CHECK(rvar::degree_gap(rvar::degree_profile(rvar::regular_graph(8, 3))) == Rational(0));

    rvar::DegreeProfile bad;
    bad.n = 3;
    bad.vertex_counts[0] = 1;
    bad.vertex_counts[2] = 2;
    bad.edge_counts[{0, 2}] = 1;
    CHECK_THROWS_AS(rvar::degree_gap(bad), rvar::input_error);
}

TEST_CASE("gap identity holds exactly") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        auto [direct, via_gap] = rvar::gap_identity(random_connected_graph(n, rng));
        CHECK(direct == via_gap);
    }

    Graph petersen = Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},          // outer cycle
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},          // inner star
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});        // spokes
    auto [direct, via_gap] = rvar::gap_identity(petersen);
    CHECK(direct == Rational(5));
    CHECK(via_gap == Rational(5));

    Graph isolated = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(rvar::gap_identity(isolated), rvar::regime_error);
}

TEST_CASE("profile constraints clear on real graphs and flag synthetic damage") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        CHECK(rvar::check_profile(rvar::degree_profile(random_connected_graph(n, rng))).all_clear());
    }

    rvar::DegreeProfile p = rvar::degree_profile(rvar::complete_split(6, 2));
    p.edge_counts[{2, 5}] = 9;  // one phantom edge
    rvar::ConstraintReport rep = rvar::check_profile(p);
    CHECK(!rep.all_clear());
    CHECK(rep.row_residuals[2] == 1);
    CHECK(rep.row_residuals[5] == 1);

    rvar::DegreeProfile q = rvar::degree_profile(rvar::complete_split(6, 2));
    q.vertex_counts[2] = 5;
    CHECK(rvar::check_profile(q).total_vertices_residual == 1);

    rvar::DegreeProfile cap = rvar::degree_profile(rvar::complete_split(6, 2));
    cap.edge_counts[{5, 5}] = 2;  // only one slot between two vertices
    rvar::ConstraintReport cr = rvar::check_profile(cap);
    CHECK(cr.capacity_violations == std::vector<std::pair<int, int>>{{5, 5}});

    rvar::DegreeProfile neg;
    neg.n = 1;
    neg.vertex_counts[3] = -1;
    neg.vertex_counts[1] = 2;
    neg.edge_counts[{1, 3}] = -2;
    rvar::ConstraintReport nr = rvar::check_profile(neg);
    CHECK(nr.negative_vertex_counts == std::vector<int>{3});
    CHECK(nr.negative_edge_counts == std::vector<std::pair<int, int>>{{1, 3}});
}

TEST_CASE("complement slacks of the extremal profile") {
    rvar::ExtremalProfile e = rvar::extremal_profile(6, 2);
    auto slacks = rvar::complement_slacks(e.profile);
    CHECK(slacks.size() == 3);
    CHECK(slacks[{2, 2}] == 6);  // independent side: all pairs missing
    CHECK(slacks[{2, 5}] == 0);  // every cross edge present
    CHECK(slacks[{5, 5}] == 0);  // clique side complete

    // full-degree vertices leave no slack anywhere in their rows
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            auto s = rvar::complement_slacks(rvar::extremal_profile(n, k).profile);
            for (auto& [pair, y] : s)
                if (pair.second == n - 1) CHECK(y == 0);
        }

    rvar::DegreeProfile over = rvar::degree_profile(rvar::complete_split(6, 2));
    over.edge_counts[{5, 5}] = 2;
    CHECK_THROWS_AS(rvar::complement_slacks(over), rvar::feasibility_error);

    rvar::DegreeProfile absent = rvar::degree_profile(rvar::complete_split(6, 2));
    absent.edge_counts[{3, 5}] = 1;
    CHECK_THROWS_AS(rvar::complement_slacks(absent), rvar::input_error);
}

TEST_CASE("product term maximum in the high-degree regime") {
    rvar::GapProductMax m = rvar::product_term_max(6, 3);
    CHECK(m.value == Rational(6, 5));
    CHECK(m.point == std::vector<Rational>{Rational(3), Rational(0), Rational(3)});

    rvar::GapProductMax m2 = rvar::product_term_max(8, 4);
    CHECK(m2.value == Rational(12, 7));
    CHECK(m2.point.size() == 4);
    CHECK(m2.point.front() == Rational(4));
    CHECK(m2.point.back() == Rational(4));

    CHECK_THROWS_AS(rvar::product_term_max(7, 3), rvar::regime_error);
    CHECK_THROWS_AS(rvar::product_term_max(7, 6), rvar::input_error);
}

TEST_CASE("closed-form minors match direct determinants and alternate in sign") {
    CHECK(rvar::hessian_minor(6, 3, 1) == Rational(-4, 15));
    CHECK(rvar::hessian_minor(6, 3, 2) == Rational(1, 60));

    for (int n = 4; n <= 10; ++n)
        for (int k = (n + 1) / 2; k <= n - 2; ++k)
            for (int j = 1; j <= n - k - 1; ++j) {
                std::vector<std::vector<Rational>> h(j, std::vector<Rational>(j));
                for (int r = 0; r < j; ++r)
                    for (int c = 0; c < j; ++c) {
                        int hi = std::max(k + r, k + c);
                        h[r][c] = Rational(-2) * (Rational(1, hi) - Rational(1, n - 1));
                    }
                Rational det = determinant(h);
                Rational closed = rvar::hessian_minor(n, k, j);
                CHECK(det == closed);
                CHECK((j % 2 == 0 ? closed > Rational(0) : closed < Rational(0)));
            }

    CHECK_THROWS_AS(rvar::hessian_minor(6, 3, 0), rvar::input_error);
    CHECK_THROWS_AS(rvar::hessian_minor(6, 3, 3), rvar::input_error);
}

TEST_CASE("extremal point is stationary; displaced points are not") {
    for (int n = 4; n <= 12; ++n)
        for (int k = (n + 1) / 2; k <= n - 2; ++k)
            for (const Rational& r : rvar::stationarity_residuals(n, k)) CHECK(r == Rational(0));

    std::vector<Rational> displaced{Rational(4), Rational(0)};
    std::vector<Rational> res = rvar::stationarity_residuals(6, 3, displaced);
    CHECK(res[0] == Rational(-2) * (Rational(1, 3) - Rational(1, 5)));
    CHECK(res[1] == Rational(-2) * (Rational(1, 4) - Rational(1, 5)));

    CHECK_THROWS_AS(rvar::stationarity_residuals(7, 3), rvar::regime_error);
    CHECK_THROWS_AS(rvar::stationarity_residuals(6, 3, std::vector<Rational>{Rational(3)}),
                    rvar::input_error);
    CHECK_THROWS_AS(rvar::stationarity_residuals(6, 5), rvar::input_error);
}
