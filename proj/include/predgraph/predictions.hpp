#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "predgraph/graph.hpp"

namespace predgraph {

enum class ProblemTag { VertexCover, WeightedVertexCover, SetCover, Mis, MaxCut };

// Fixed optimal solution that predictions are correlated with.
struct GroundTruth {
  ProblemTag problem;
  std::vector<int> subset;          // VC/MIS cover or independent set; SC indices
  std::vector<int8_t> assignment;   // MaxCut +-1 labels

  std::vector<char> indicator(int n) const;
};

// Per-incidence prediction bits. For graph problems one bit per
// (edge, endpoint slot); for set systems one bit per (set, element position).
// Bit domain is {0,1} except MaxCut, which uses {-1,+1}.
struct PredictionTable {
  enum class Domain { Binary, Sign };
  Domain domain = Domain::Binary;
  double epsilon = 0;
  std::uint64_t seed = 0;
  std::vector<std::array<int8_t, 2>> edge_bits;   // [edge index][slot]
  std::vector<std::vector<int8_t>> set_bits;      // [set j][position in S_j]

  void dump_csv(std::ostream& out) const;
};

PredictionTable gen_vc_predictions(const Graph& g, const GroundTruth& truth,
                                   double eps, std::uint64_t seed);
PredictionTable gen_mis_predictions(const Graph& g, const GroundTruth& truth,
                                    double eps, std::uint64_t seed);
PredictionTable gen_sc_predictions(const SetSystem& ss, const GroundTruth& truth,
                                   double eps, std::uint64_t seed);
PredictionTable gen_maxcut_predictions(const Graph& g, const GroundTruth& truth,
                                       double eps, std::uint64_t seed);

// Strict majority; ties resolve to 0. Empty input is an error.
int majority(std::span<const int8_t> bits);

// Majority vote of all bits predicting vertex v over its incident edges.
int majority_vote(const Graph& g, const PredictionTable& preds, VertexId v);

// Per-vertex aggregate z_i = (1/deg i) * sum over incident edges of
// b_i(e)/(2 eps); isolated vertices get 0.
std::vector<double> aggregate_z(const Graph& g, const PredictionTable& preds,
                                double eps);

}  // namespace predgraph
