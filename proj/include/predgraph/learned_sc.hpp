#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "predgraph/graph.hpp"
#include "predgraph/predictions.hpp"

namespace predgraph {

struct ScSolution {
  std::vector<int> j_l;   // voted heavy sets
  std::vector<int> j_a;   // greedy over light sets
  std::vector<int> j_f;   // final fix over all sets
  std::vector<int> chosen;  // union, sorted
  std::vector<int> i_l;   // elements covered by j_l
  std::vector<int> i_a;   // light-coverable elements outside i_l
  int delta = 0;

  int size() const { return static_cast<int>(chosen.size()); }
};

// Learning-augmented set cover: vote sets of size >= delta in decreasing
// size order (skipping redundant ones), greedy the light sets over what
// they can still cover, greedy everything over the rest.
ScSolution learned_set_cover(const SetSystem& ss, const PredictionTable& preds,
                             double eps,
                             std::optional<int> delta_override = std::nullopt);

struct ScPartReport {
  int false_positives = 0;      // |J_l \ OPT_heavy|
  long long false_negative_mass = 0;  // sum of |S_j| over missed heavy OPT sets
  int j_a_size = 0;
  int j_f_size = 0;
};

ScPartReport sc_part_report(const SetSystem& ss, const ScSolution& sol,
                            const std::vector<int>& opt);

}  // namespace predgraph
