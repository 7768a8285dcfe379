#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "predgraph/baselines.hpp"
#include "predgraph/graph.hpp"
#include "predgraph/predictions.hpp"

namespace predgraph {

struct MisParams {
  double epsilon = 0.2;
  std::optional<int> delta_override;
  bool allow_large_epsilon = false;  // lift the eps <= 1/4 analysis bound

  // Degree threshold: ceil(3 * ln(1/eps) / eps^2), floored at 1.
  int delta() const {
    if (delta_override) return std::max(1, *delta_override);
    return std::max(1, static_cast<int>(std::ceil(
                           3.0 * std::log(1.0 / epsilon) / (epsilon * epsilon))));
  }
};

struct CleanupResult {
  std::vector<VertexId> kept;
  std::vector<std::pair<VertexId, VertexId>> removed_pairs;
};

// Repeatedly delete both endpoints of the lexicographically smallest edge
// inside S until S is independent.
CleanupResult mis_cleanup(const Graph& g, const std::vector<VertexId>& s);

struct MisSolution {
  std::vector<VertexId> c1;      // bounded-degree part
  std::vector<VertexId> c2;      // voted-and-cleaned part
  std::vector<VertexId> chosen;  // the larger of the two (+ isolated vertices)
  bool chose_c2 = false;
  std::vector<std::pair<VertexId, VertexId>> removed_pairs;

  int size() const { return static_cast<int>(chosen.size()); }
};

// Learning-augmented MIS: bounded-degree solver on the low-degree part,
// majority vote plus clean-up on the high-degree part, keep the larger.
MisSolution learned_mis(const Graph& g, const PredictionTable& preds,
                        const MisParams& params,
                        const BoundedDegreeSolver& low_solver = default_mis_solver());

struct MisQualityReport {
  bool comparable = false;
  double ratio = 0;
  int c1_size = 0;
  int c2_size = 0;
  int chosen_size = 0;
};

MisQualityReport mis_quality_report(const MisSolution& sol,
                                    std::optional<int> alpha_exact);

}  // namespace predgraph
