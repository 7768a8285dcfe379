#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "predgraph/graph.hpp"

namespace predgraph {

struct ExactBudget {
  long long node_limit = 200'000'000;
  std::chrono::milliseconds time_limit{60'000};
};

// "Unknown" is a first-class result: a blown budget never yields a wrong
// optimum, it yields no optimum.
template <typename T>
struct ExactResult {
  bool known = false;
  double value = 0;
  T witness{};
};

using VertexSetResult = ExactResult<std::vector<VertexId>>;
using IndexSetResult = ExactResult<std::vector<int>>;
using AssignmentResult = ExactResult<std::vector<int8_t>>;

// Minimum-cardinality vertex cover (branch and bound, n <= 64).
VertexSetResult exact_vc(const Graph& g, const ExactBudget& budget = {});

// Minimum-weight vertex cover.
VertexSetResult exact_weighted_vc(const Graph& g, const ExactBudget& budget = {});

// Maximum independent set, via the complement of exact_vc (unweighted).
VertexSetResult exact_mis(const Graph& g, const ExactBudget& budget = {});

// Minimum set cover; bitmask DP for m <= 24, branch and bound beyond.
IndexSetResult exact_set_cover(const SetSystem& ss,
                               const ExactBudget& budget = {});

// Maximum cut value and a witnessing +-1 assignment (n <= 26).
AssignmentResult exact_maxcut(const Graph& g, const ExactBudget& budget = {});

// Feasibility checkers shared with tests and the harness.
bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& cover);
bool is_independent_set(const Graph& g, const std::vector<VertexId>& set);
bool is_set_cover(const SetSystem& ss, const std::vector<int>& chosen);
double cut_value(const Graph& g, const std::vector<int8_t>& assignment);

}  // namespace predgraph
