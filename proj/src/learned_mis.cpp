#include "predgraph/learned_mis.hpp"

#include <algorithm>
#include <stdexcept>

#include "predgraph/exact.hpp"

namespace predgraph {

CleanupResult mis_cleanup(const Graph& g, const std::vector<VertexId>& s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : s) {
    g.check_vertex(v);
    in[v] = 1;
  }
  CleanupResult res;
  for (;;) {
    // Lexicographically smallest induced edge (u, v) with u < v.
    std::pair<VertexId, VertexId> pick{-1, -1};
    for (const auto& e : g.edges()) {
      if (!in[e.u] || !in[e.v]) continue;
      std::pair<VertexId, VertexId> key = std::minmax(e.u, e.v);
      if (pick.first < 0 || key < pick) pick = key;
    }
    if (pick.first < 0) break;
    in[pick.first] = in[pick.second] = 0;
    res.removed_pairs.push_back(pick);
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (in[v]) res.kept.push_back(v);
  return res;
}

MisSolution learned_mis(const Graph& g, const PredictionTable& preds,
                        const MisParams& params,
                        const BoundedDegreeSolver& low_solver) {
  if (preds.domain != PredictionTable::Domain::Binary)
    throw std::invalid_argument("MIS needs binary predictions");
  if (static_cast<int>(preds.edge_bits.size()) != g.num_edges())
    throw std::domain_error("prediction table does not match graph");
  if (params.epsilon > 0.25 && !params.allow_large_epsilon)
    throw std::domain_error(
        "epsilon > 1/4 outside the analysis range; set allow_large_epsilon");

  int delta = params.delta();
  std::vector<VertexId> low, high;
  for (int v = 0; v < g.num_vertices(); ++v)
    (g.degree(v) <= delta ? low : high).push_back(v);

  MisSolution sol;
  if (!low.empty()) {
    auto sub = induced_subgraph(g, low);
    for (VertexId v : low_solver.run(sub.graph)) sol.c1.push_back(sub.back_map[v]);
    std::sort(sol.c1.begin(), sol.c1.end());
  }

  std::vector<VertexId> voted;
  for (VertexId v : high)
    if (majority_vote(g, preds, v) == 1) voted.push_back(v);
  auto cleaned = mis_cleanup(g, voted);
  sol.c2 = std::move(cleaned.kept);
  sol.removed_pairs = std::move(cleaned.removed_pairs);

  sol.chose_c2 = sol.c2.size() >= sol.c1.size();
  sol.chosen = sol.chose_c2 ? sol.c2 : sol.c1;
  // Isolated vertices are harmless and strictly improving; always keep them.
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0 &&
        !std::binary_search(sol.chosen.begin(), sol.chosen.end(), v))
      sol.chosen.push_back(v);
  std::sort(sol.chosen.begin(), sol.chosen.end());

  if (!is_independent_set(g, sol.c1) || !is_independent_set(g, sol.c2) ||
      !is_independent_set(g, sol.chosen))
    throw std::logic_error("learned MIS produced a dependent set");
  return sol;
}

MisQualityReport mis_quality_report(const MisSolution& sol,
                                    std::optional<int> alpha_exact) {
  MisQualityReport r;
  r.c1_size = static_cast<int>(sol.c1.size());
  r.c2_size = static_cast<int>(sol.c2.size());
  r.chosen_size = sol.size();
  if (alpha_exact && *alpha_exact > 0) {
    r.comparable = true;
    r.ratio = static_cast<double>(r.chosen_size) / *alpha_exact;
  }
  return r;
}

}  // namespace predgraph
