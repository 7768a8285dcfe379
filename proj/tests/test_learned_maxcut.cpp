#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "predgraph/baselines.hpp"
#include "predgraph/exact.hpp"
#include "predgraph/graph.hpp"
#include "predgraph/learned_maxcut.hpp"
#include "predgraph/rng.hpp"

using namespace predgraph;

TEST_CASE("delta default is ceil(1/eps)") {
  MaxcutParams p;
  p.epsilon = 0.3;
  CHECK(p.delta() == 4);
  p.delta_override = 2;
  CHECK(p.delta() == 2);
}

TEST_CASE("wide/narrow classification arithmetic") {
  // Vertex 0 with incident weights {3,1}: prefix(delta=1) = 3 > 0.5*4.
  Graph g(3, {{0, 1, 3.0}, {0, 2, 1.0}});
  auto tags = classify_wide_narrow(g, 1, 0.5);
  CHECK_FALSE(tags.wide[0]);

  // 2-regular unit weights: prefix 1 <= 0.5 * 2.
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto tc = classify_wide_narrow(c4, 1, 0.5);
  for (int v = 0; v < 4; ++v) CHECK(tc.wide[v]);
  CHECK(tc.graph_wide);

  // Uniform complete graph, delta=1, eta=0.5, n >= 3: all wide.
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto tk = classify_wide_narrow(k4, 1, 0.5);
  for (int v = 0; v < 4; ++v) CHECK(tk.wide[v]);
  CHECK(tk.graph_wide);

  CHECK_THROWS(classify_wide_narrow(k4, 0, 0.5));
  CHECK_THROWS(classify_wide_narrow(k4, 1, 0.0));
  CHECK_THROWS(classify_wide_narrow(k4, 1, 1.0));
}

TEST_CASE("graph-level wideness follows narrow weight mass") {
  // Star: center prefix is huge relative to eta, making vertices narrow and
  // the graph narrow.
  std::vector<Edge> es;
  for (int i = 1; i <= 4; ++i) es.push_back({0, i});
  Graph star(5, es);
  auto t = classify_wide_narrow(star, 2, 0.1);
  CHECK_FALSE(t.graph_wide);
  CHECK(t.narrow_weight > 0.1 * t.total_weight);
}

TEST_CASE("matrix truncation") {
  // All narrow -> zero matrix.
  Graph g(3, {{0, 1, 3.0}, {0, 2, 1.0}, {1, 2, 2.0}});
  WideNarrowTags none;
  none.wide.assign(3, 0);
  CHECK(truncate_matrix(g, none, 1, 0.5).isZero(0));

  // Unit-weight vertex with W = 4, delta = 2, eta = 1: cap 2 leaves entries.
  std::vector<Edge> es;
  for (int i = 1; i <= 4; ++i) es.push_back({0, i});
  Graph star(5, es);
  WideNarrowTags all;
  all.wide.assign(5, 1);
  auto a = truncate_matrix(star, all, 2, 1.0);
  for (int i = 1; i <= 4; ++i) CHECK(a(0, i) == doctest::Approx(1.0));

  // Entry 3 with cap 2 -> 2. Row 0 has W = 4, delta = 2, eta = 1 -> cap 2.
  Graph w(3, {{0, 1, 3.0}, {0, 2, 1.0}});
  WideNarrowTags aw;
  aw.wide.assign(3, 1);
  auto m = truncate_matrix(w, aw, 2, 1.0);
  CHECK(m(0, 1) == doctest::Approx(2.0));
  CHECK(m(0, 2) == doctest::Approx(1.0));
  // Asymmetry is allowed: row 1 has its own cap (W=3, cap 1.5).
  CHECK(m(1, 0) == doctest::Approx(1.5));
}

TEST_CASE("box solve: zero z forces zero objective") {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 1, 0;
  Eigen::VectorXd z = Eigen::VectorXd::Zero(2);
  MaxcutParams p;
  auto x = solve_box_convex(a, z, p);
  CHECK(box_objective(a, z, x) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("box solve: beats a fine grid oracle on n = 2") {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 1, 0;
  Eigen::VectorXd z(2);
  z << 2, -2;
  MaxcutParams p;
  auto x = solve_box_convex(a, z, p);
  double grid_best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd t(2);
  for (int i = -100; i <= 100; ++i)
    for (int j = -100; j <= 100; ++j) {
      t << i / 100.0, j / 100.0;
      grid_best = std::min(grid_best, box_objective(a, z, t));
    }
  CHECK(box_objective(a, z, x) <= grid_best + 1e-3);
}

TEST_CASE("box solve never loses to its own starts") {
  SplitMix rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(4));
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rng.next_double() < 0.6) a(i, j) = rng.next_double() * 3;
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z(i) = (rng.next_double() - 0.5) * 6;
    MaxcutParams p;
    auto x = solve_box_convex(a, z, p);
    double fx = box_objective(a, z, x);
    Eigen::VectorXd clamped = z.cwiseMax(-1.0).cwiseMin(1.0);
    Eigen::VectorXd signs(n);
    for (int i = 0; i < n; ++i) signs(i) = z(i) > 0 ? 1 : (z(i) < 0 ? -1 : 0);
    CHECK(fx <= box_objective(a, z, clamped) + 1e-12);
    CHECK(fx <= box_objective(a, z, signs) + 1e-12);
    CHECK(fx <= box_objective(a, z, Eigen::VectorXd::Zero(n)) + 1e-12);
  }
}

TEST_CASE("sequential rounding traces") {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 1, 0;

  // Already +-1: kept as-is (coefficients keep each choice optimal).
  Eigen::VectorXd pm(2);
  pm << 1, -1;
  auto y = sequential_rounding(a, pm);
  CHECK(y(0) == 1);
  CHECK(y(1) == -1);

  // Hand trace: x = (0.5, -0.5) -> y = (+1, -1), quadratic form drops.
  Eigen::VectorXd x(2);
  x << 0.5, -0.5;
  auto yr = sequential_rounding(a, x);
  CHECK(yr(0) == 1);
  CHECK(yr(1) == -1);
  CHECK(yr.dot(a * yr) == doctest::Approx(-2.0));
  CHECK(x.dot(a * x) == doctest::Approx(-0.5));

  // Zero matrix: tie rule puts everything at +1.
  Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(3, 3);
  auto yz = sequential_rounding(zero, Eigen::VectorXd::Zero(3));
  for (int i = 0; i < 3; ++i) CHECK(yz(i) == 1);
}

TEST_CASE("rounding never increases the quadratic form") {
  SplitMix rng(654);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(5));
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rng.next_double() < 0.5) a(i, j) = rng.next_double() * 2;
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = rng.next_double() * 2 - 1;
    auto y = sequential_rounding(a, x);
    CHECK(y.dot(a * y) <= x.dot(a * x) + 1e-9);
    for (int i = 0; i < n; ++i) CHECK(std::abs(y(i)) == doctest::Approx(1.0));
  }
}

TEST_CASE("pipeline on bipartite C6 returns the full cut") {
  std::vector<Edge> es;
  for (int i = 0; i < 6; ++i) es.push_back({i, (i + 1) % 6});
  Graph c6(6, es);
  auto opt = exact_maxcut(c6);
  REQUIRE(opt.known);
  REQUIRE(opt.value == doctest::Approx(6.0));
  GroundTruth truth{ProblemTag::MaxCut, {}, opt.witness};
  auto preds = gen_maxcut_predictions(c6, truth, 0.45, 3);
  MaxcutParams p;
  p.epsilon = 0.45;
  auto sol = learned_maxcut(c6, preds, p);
  CHECK(sol.value == doctest::Approx(6.0));
  CHECK(cut_value(c6, sol.assignment) == doctest::Approx(sol.value));
}

TEST_CASE("all-narrow graph falls back to local search") {
  // Star with one dominant edge: every vertex narrow at small eta.
  Graph g(3, {{0, 1, 100.0}, {0, 2, 1.0}});
  auto opt = exact_maxcut(g);
  REQUIRE(opt.known);
  GroundTruth truth{ProblemTag::MaxCut, {}, opt.witness};
  auto preds = gen_maxcut_predictions(g, truth, 0.2, 5);
  MaxcutParams p;
  p.epsilon = 0.2;
  p.eta = 0.01;
  p.delta_override = 1;
  auto sol = learned_maxcut(g, preds, p);
  CHECK_FALSE(sol.graph_wide);
  CHECK(sol.value >= g.total_edge_weight() / 2 - 1e-9);
}

TEST_CASE("best-of combiner never loses to local search") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Graph g = gen_er_graph(14, 0.3, 9900 + s);
    if (g.num_edges() == 0) continue;
    auto opt = exact_maxcut(g);
    REQUIRE(opt.known);
    GroundTruth truth{ProblemTag::MaxCut, {}, opt.witness};
    auto preds = gen_maxcut_predictions(g, truth, 0.3, s);
    MaxcutParams p;
    p.epsilon = 0.3;
    auto sol = learned_maxcut(g, preds, p);
    CHECK(sol.value >= sol.local_search_value - 1e-9);
    CHECK(sol.value >= sol.learned_value - 1e-9);
    CHECK(sol.value <= opt.value + 1e-9);
  }
}
