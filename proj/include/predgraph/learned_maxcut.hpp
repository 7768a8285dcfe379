#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "predgraph/graph.hpp"
#include "predgraph/predictions.hpp"

namespace predgraph {

struct MaxcutParams {
  double epsilon = 0.2;
  double eta = 0.1;
  std::optional<int> delta_override;  // default ceil(1/eps)
  int iters = 2000;
  // Step-size scales tried per start; best objective wins.
  std::vector<double> step_scales{0.01, 0.1, 1.0};

  int delta() const {
    if (delta_override) return std::max(1, *delta_override);
    return std::max(1, static_cast<int>(std::ceil(1.0 / epsilon)));
  }
};

struct WideNarrowTags {
  std::vector<char> wide;  // per vertex
  bool graph_wide = false;
  double narrow_weight = 0;  // sum of W_i over narrow vertices
  double total_weight = 0;   // W = sum of all W_i
};

// Per-vertex wide/narrow classification: wide iff the Delta heaviest
// incident edges carry at most eta * W_i; graph-level verdict per the sum
// of narrow weighted degrees.
WideNarrowTags classify_wide_narrow(const Graph& g, int delta, double eta);

// Truncated matrix: narrow rows zeroed, wide rows capped entrywise at
// eta * W_i / Delta. Row capping may leave the matrix asymmetric; it is
// stored exactly as defined.
Eigen::MatrixXd truncate_matrix(const Graph& g, const WideNarrowTags& tags,
                                int delta, double eta);

// Objective of the box-constrained convex step.
double box_objective(const Eigen::MatrixXd& a_tilde, const Eigen::VectorXd& z,
                     const Eigen::VectorXd& x);

// Projected subgradient descent with multi-start (clamp(z), sign(z), 0) and
// best-iterate tracking, plus an exact coordinate polish.
Eigen::VectorXd solve_box_convex(const Eigen::MatrixXd& a_tilde,
                                 const Eigen::VectorXd& z,
                                 const MaxcutParams& params = {});

// Greedy coordinate-wise rounding; never increases the quadratic form.
Eigen::VectorXd sequential_rounding(const Eigen::MatrixXd& a_tilde,
                                    const Eigen::VectorXd& x);

struct MaxcutSolution {
  std::vector<int8_t> assignment;
  double value = 0;
  bool graph_wide = false;
  double learned_value = 0;      // truncation pipeline candidate
  double local_search_value = 0; // flip local search candidate
  bool learned_won = false;
};

// Full pipeline plus the best-of combiner against flip local search.
MaxcutSolution learned_maxcut(const Graph& g, const PredictionTable& preds,
                              const MaxcutParams& params);

}  // namespace predgraph
