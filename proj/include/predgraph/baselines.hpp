#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "predgraph/graph.hpp"
#include "predgraph/predictions.hpp"

namespace predgraph {

// Pluggable bounded-degree solver slot: any procedure mapping a graph to a
// feasible vertex set, with a human-readable guarantee tag.
struct BoundedDegreeSolver {
  std::string guarantee;
  std::function<std::vector<VertexId>(const Graph&)> run;
};

// Maximal-matching 2-approximation for (unweighted) vertex cover.
std::vector<VertexId> vc_2approx_matching(const Graph& g);

// Local-ratio 2-approximation for weighted vertex cover.
std::vector<VertexId> weighted_vc_2approx(const Graph& g);

// Greedy set cover restricted to a target element subset and an allowed set
// family; ties break to the lowest set index.
std::vector<int> greedy_set_cover(const SetSystem& ss,
                                  const std::vector<int>& universe_subset,
                                  const std::vector<int>& allowed_sets);

// Min-degree greedy independent set; achieves the Caro-Wei bound.
std::vector<VertexId> greedy_mis_min_degree(const Graph& g);

struct CutResult {
  double value = 0;
  std::vector<int8_t> assignment;
};

// Single-flip local search; local optima cut at least half the total weight.
// If start is empty, uses a deterministic greedy sequential placement.
CutResult maxcut_local_search(const Graph& g,
                              std::vector<int8_t> start = {},
                              std::uint64_t seed = 0);

// Degree-agnostic predictions-only heuristic for MIS: majority-vote every
// vertex, then clean up to independence. Isolated vertices are always kept.
std::vector<VertexId> mis_predictions_only(const Graph& g,
                                           const PredictionTable& preds);

// Default solver instances for the learned algorithms' pluggable slots.
BoundedDegreeSolver default_vc_solver();
BoundedDegreeSolver default_weighted_vc_solver();
BoundedDegreeSolver default_mis_solver();

}  // namespace predgraph
