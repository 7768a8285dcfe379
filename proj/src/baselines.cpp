#include "predgraph/baselines.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "predgraph/learned_mis.hpp"
#include "predgraph/rng.hpp"

namespace predgraph {

std::vector<VertexId> vc_2approx_matching(const Graph& g) {
  std::vector<char> covered(g.num_vertices(), 0);
  std::vector<VertexId> cover;
  for (const auto& e : g.edges()) {
    if (covered[e.u] || covered[e.v]) continue;
    covered[e.u] = covered[e.v] = 1;
    cover.push_back(e.u);
    cover.push_back(e.v);
  }
  return cover;
}

std::vector<VertexId> weighted_vc_2approx(const Graph& g) {
  std::vector<double> residual(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    residual[v] = g.vertex_weight(v);
    if (!(residual[v] > 0))
      throw std::domain_error("weighted VC needs positive vertex weights");
  }
  // Local ratio: pay down both endpoints of each uncovered edge by the
  // smaller residual; zero-residual vertices form the cover.
  for (const auto& e : g.edges()) {
    if (residual[e.u] <= 0 || residual[e.v] <= 0) continue;
    double pay = std::min(residual[e.u], residual[e.v]);
    residual[e.u] -= pay;
    residual[e.v] -= pay;
  }
  std::vector<VertexId> cover;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (residual[v] <= 0) cover.push_back(v);
  return cover;
}

std::vector<int> greedy_set_cover(const SetSystem& ss,
                                  const std::vector<int>& universe_subset,
                                  const std::vector<int>& allowed_sets) {
  std::vector<char> uncovered(ss.m, 0);
  int remaining = 0;
  for (int e : universe_subset) {
    if (e < 0 || e >= ss.m) throw std::invalid_argument("element out of range");
    if (!uncovered[e]) {
      uncovered[e] = 1;
      ++remaining;
    }
  }
  std::vector<int> chosen;
  while (remaining > 0) {
    int best = -1, best_gain = 0;
    for (int j : allowed_sets) {
      int gain = 0;
      for (int e : ss.sets[j]) gain += uncovered[e];
      if (gain > best_gain || (gain == best_gain && gain > 0 && j < best)) {
        best_gain = gain;
        best = j;
      }
    }
    if (best < 0)
      throw std::runtime_error("greedy set cover: subset not coverable");
    chosen.push_back(best);
    for (int e : ss.sets[best]) {
      if (uncovered[e]) {
        uncovered[e] = 0;
        --remaining;
      }
    }
  }
  return chosen;
}

std::vector<VertexId> greedy_mis_min_degree(const Graph& g) {
  std::vector<char> alive(g.num_vertices(), 1);
  std::vector<int> deg(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
  int remaining = g.num_vertices();
  std::vector<VertexId> out;
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (alive[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    out.push_back(pick);
    // Remove pick and its alive neighbors, updating residual degrees.
    std::vector<VertexId> gone{pick};
    for (VertexId u : g.neighbors(pick))
      if (alive[u]) gone.push_back(u);
    for (VertexId u : gone) {
      alive[u] = 0;
      --remaining;
    }
    for (VertexId u : gone)
      for (VertexId w : g.neighbors(u))
        if (alive[w]) --deg[w];
  }
  return out;
}

CutResult maxcut_local_search(const Graph& g, std::vector<int8_t> start,
                              std::uint64_t seed) {
  int n = g.num_vertices();
  std::vector<int8_t> x;
  if (!start.empty()) {
    if (static_cast<int>(start.size()) != n)
      throw std::invalid_argument("start assignment size != n");
    x = std::move(start);
  } else {
    // Greedy sequential placement: put each vertex on the side that cuts
    // more weight against already-placed neighbors. Deterministic; the seed
    // only matters if a caller later wants randomized restarts.
    (void)seed;
    x.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      double bal = 0;
      for (int e : g.incident_edges(v)) {
        VertexId u = g.opposite(e, v);
        if (x[u] != 0) bal += g.edge(e).w * x[u];
      }
      x[v] = bal > 0 ? -1 : 1;
    }
  }
  // Single-flip hill climbing until no vertex flip gains.
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      double gain = 0;
      for (int e : g.incident_edges(v)) {
        VertexId u = g.opposite(e, v);
        gain += (x[u] == x[v] ? g.edge(e).w : -g.edge(e).w);
      }
      if (gain > 1e-12) {
        x[v] = static_cast<int8_t>(-x[v]);
        improved = true;
      }
    }
  }
  CutResult res;
  res.assignment = std::move(x);
  for (const auto& e : g.edges())
    if (res.assignment[e.u] != res.assignment[e.v]) res.value += e.w;
  return res;
}

std::vector<VertexId> mis_predictions_only(const Graph& g,
                                           const PredictionTable& preds) {
  std::vector<VertexId> voted;
  std::vector<VertexId> isolated;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) {
      isolated.push_back(v);
    } else if (majority_vote(g, preds, v) == 1) {
      voted.push_back(v);
    }
  }
  auto cleaned = mis_cleanup(g, voted).kept;
  cleaned.insert(cleaned.end(), isolated.begin(), isolated.end());
  std::sort(cleaned.begin(), cleaned.end());
  return cleaned;
}

BoundedDegreeSolver default_vc_solver() {
  return {"2-approx (maximal matching)", vc_2approx_matching};
}

BoundedDegreeSolver default_weighted_vc_solver() {
  return {"2-approx (local ratio)", weighted_vc_2approx};
}

BoundedDegreeSolver default_mis_solver() {
  return {"Caro-Wei greedy (min degree)", greedy_mis_min_degree};
}

}  // namespace predgraph
