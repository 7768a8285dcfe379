#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "predgraph/baselines.hpp"
#include "predgraph/graph.hpp"
#include "predgraph/predictions.hpp"

namespace predgraph {

struct VcParams {
  double epsilon = 0.2;
  std::optional<int> delta_override;

  // Degree threshold: ceil(100 * ln(1/eps) / eps^2), floored at 1.
  int delta() const {
    if (delta_override) return std::max(1, *delta_override);
    return std::max(
        1, static_cast<int>(std::ceil(100.0 * std::log(1.0 / epsilon) /
                                      (epsilon * epsilon))));
  }
};

enum class EdgeClass { HeavyHeavy, HeavyLight, LightLight };

// Edge classes under threshold delta, by endpoint degrees in g.
std::vector<EdgeClass> classify_edges(const Graph& g, int delta);

struct VcSolution {
  std::vector<VertexId> s0, s1, s2;
  std::vector<VertexId> cover;         // s0 u s1 u s2, sorted
  std::vector<int8_t> votes;           // m_v for heavy vertices, -1 otherwise
  int delta = 0;
  double weight = 0;                   // |cover| when unweighted

  int size() const { return static_cast<int>(cover.size()); }
};

// Learning-augmented vertex cover: vote heavy vertices, patch the remaining
// heavy edges with a 2-approximation, hand light-light leftovers to the
// pluggable bounded-degree solver.
VcSolution learned_vc(const Graph& g, const PredictionTable& preds,
                      const VcParams& params,
                      const BoundedDegreeSolver& s2_solver = default_vc_solver());

// Weighted variant with the eps^10 swap thresholds on N^-(v).
VcSolution learned_weighted_vc(
    const Graph& g, const PredictionTable& preds, const VcParams& params,
    const BoundedDegreeSolver& s2_solver = default_weighted_vc_solver());

struct VcPartReport {
  double s0_in_opt = 0;   // |S0 n OPT| (weight in the weighted case)
  double s0_off_opt = 0;  // |S0 \ OPT|
  double s1 = 0;
  double s2 = 0;
};

VcPartReport vc_part_report(const Graph& g, const VcSolution& sol,
                            const std::vector<VertexId>& opt);

}  // namespace predgraph
