#include "predgraph/predictions.hpp"

#include <ostream>
#include <stdexcept>

#include "predgraph/rng.hpp"

namespace predgraph {

namespace {

void check_eps(double eps) {
  if (!(eps > 0) || !(eps < 0.5))
    throw std::domain_error("epsilon must lie strictly in (0, 1/2)");
}

// Substream key for one (edge, endpoint slot) incidence. Stable under any
// iteration order.
std::uint64_t edge_key(int edge_index, int slot) {
  return (static_cast<std::uint64_t>(edge_index) << 1) | slot;
}

PredictionTable gen_binary_edge_predictions(const Graph& g,
                                            const std::vector<char>& in_truth,
                                            double eps, std::uint64_t seed) {
  PredictionTable t;
  t.domain = PredictionTable::Domain::Binary;
  t.epsilon = eps;
  t.seed = seed;
  t.edge_bits.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    for (int slot = 0; slot < 2; ++slot) {
      VertexId v = slot == 0 ? ed.u : ed.v;
      bool correct = keyed_bernoulli(seed, edge_key(e, slot), 0.5 + eps);
      int8_t truth = in_truth[v] ? 1 : 0;
      t.edge_bits[e][slot] = correct ? truth : static_cast<int8_t>(1 - truth);
    }
  }
  return t;
}

}  // namespace

std::vector<char> GroundTruth::indicator(int n) const {
  std::vector<char> ind(n, 0);
  for (int v : subset) {
    if (v < 0 || v >= n) throw std::invalid_argument("truth vertex out of range");
    ind[v] = 1;
  }
  return ind;
}

void PredictionTable::dump_csv(std::ostream& out) const {
  out << "edge_index,endpoint_slot,bit\n";
  for (size_t e = 0; e < edge_bits.size(); ++e)
    for (int slot = 0; slot < 2; ++slot)
      out << e << ',' << slot << ',' << int(edge_bits[e][slot]) << '\n';
  for (size_t j = 0; j < set_bits.size(); ++j)
    for (size_t i = 0; i < set_bits[j].size(); ++i)
      out << j << ',' << i << ',' << int(set_bits[j][i]) << '\n';
}

PredictionTable gen_vc_predictions(const Graph& g, const GroundTruth& truth,
                                   double eps, std::uint64_t seed) {
  check_eps(eps);
  return gen_binary_edge_predictions(g, truth.indicator(g.num_vertices()), eps,
                                     seed);
}

PredictionTable gen_mis_predictions(const Graph& g, const GroundTruth& truth,
                                    double eps, std::uint64_t seed) {
  check_eps(eps);
  return gen_binary_edge_predictions(g, truth.indicator(g.num_vertices()), eps,
                                     seed);
}

PredictionTable gen_sc_predictions(const SetSystem& ss, const GroundTruth& truth,
                                   double eps, std::uint64_t seed) {
  check_eps(eps);
  std::vector<char> in_opt(ss.num_sets(), 0);
  for (int j : truth.subset) {
    if (j < 0 || j >= ss.num_sets())
      throw std::invalid_argument("truth set index out of range");
    in_opt[j] = 1;
  }
  PredictionTable t;
  t.domain = PredictionTable::Domain::Binary;
  t.epsilon = eps;
  t.seed = seed;
  t.set_bits.resize(ss.num_sets());
  std::uint64_t offset = 0;
  for (int j = 0; j < ss.num_sets(); ++j) {
    t.set_bits[j].resize(ss.sets[j].size());
    for (size_t i = 0; i < ss.sets[j].size(); ++i) {
      bool correct = keyed_bernoulli(seed, offset + i, 0.5 + eps);
      int8_t truth_bit = in_opt[j] ? 1 : 0;
      t.set_bits[j][i] = correct ? truth_bit : static_cast<int8_t>(1 - truth_bit);
    }
    offset += ss.sets[j].size();
  }
  return t;
}

PredictionTable gen_maxcut_predictions(const Graph& g, const GroundTruth& truth,
                                       double eps, std::uint64_t seed) {
  check_eps(eps);
  if (static_cast<int>(truth.assignment.size()) != g.num_vertices())
    throw std::invalid_argument("truth assignment size != n");
  for (int8_t a : truth.assignment)
    if (a != 1 && a != -1) throw std::invalid_argument("assignment must be +-1");
  PredictionTable t;
  t.domain = PredictionTable::Domain::Sign;
  t.epsilon = eps;
  t.seed = seed;
  t.edge_bits.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    for (int slot = 0; slot < 2; ++slot) {
      VertexId v = slot == 0 ? ed.u : ed.v;
      bool correct = keyed_bernoulli(seed, edge_key(e, slot), 0.5 + eps);
      t.edge_bits[e][slot] =
          correct ? truth.assignment[v] : static_cast<int8_t>(-truth.assignment[v]);
    }
  }
  return t;
}

int majority(std::span<const int8_t> bits) {
  if (bits.empty()) throw std::domain_error("majority of empty bit sequence");
  int ones = 0;
  for (int8_t b : bits) ones += (b == 1);
  return 2 * ones > static_cast<int>(bits.size()) ? 1 : 0;
}

int majority_vote(const Graph& g, const PredictionTable& preds, VertexId v) {
  if (preds.domain != PredictionTable::Domain::Binary)
    throw std::invalid_argument("majority vote needs binary-domain predictions");
  if (static_cast<int>(preds.edge_bits.size()) != g.num_edges())
    throw std::domain_error("prediction table does not match graph");
  std::vector<int8_t> bits;
  bits.reserve(g.degree(v));
  for (int e : g.incident_edges(v))
    bits.push_back(preds.edge_bits[e][g.endpoint_slot(e, v)]);
  return majority(bits);
}

std::vector<double> aggregate_z(const Graph& g, const PredictionTable& preds,
                                double eps) {
  if (preds.domain != PredictionTable::Domain::Sign)
    throw std::invalid_argument("aggregate_z needs sign-domain predictions");
  check_eps(eps);
  std::vector<double> z(g.num_vertices(), 0.0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    int d = g.degree(v);
    if (d == 0) continue;  // isolated: z = 0 by convention
    double s = 0;
    for (int e : g.incident_edges(v))
      s += preds.edge_bits[e][g.endpoint_slot(e, v)] / (2.0 * eps);
    z[v] = s / d;
  }
  return z;
}

}  // namespace predgraph
