#include "predgraph/learned_vc.hpp"

#include <algorithm>
#include <stdexcept>

#include "predgraph/exact.hpp"

namespace predgraph {

namespace {

void check_preds(const Graph& g, const PredictionTable& preds) {
  if (preds.domain != PredictionTable::Domain::Binary)
    throw std::invalid_argument("vertex cover needs binary predictions");
  if (static_cast<int>(preds.edge_bits.size()) != g.num_edges())
    throw std::domain_error("prediction table does not match graph");
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Shared stages 2 and 3: patch heavy edges missed by S0, then run the
// bounded-degree solver on the light-light remainder.
void run_fix_stages(const Graph& g, int delta, const std::vector<char>& in_s0,
                    const BoundedDegreeSolver& heavy_fix,
                    const BoundedDegreeSolver& s2_solver, VcSolution& sol) {
  auto classes = classify_edges(g, delta);
  std::vector<int> heavy_uncovered, light_uncovered;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (in_s0[ed.u] || in_s0[ed.v]) continue;
    if (classes[e] == EdgeClass::LightLight)
      light_uncovered.push_back(e);
    else
      heavy_uncovered.push_back(e);
  }
  std::vector<char> in_s1(g.num_vertices(), 0);
  if (!heavy_uncovered.empty()) {
    auto sub = edge_subgraph(g, heavy_uncovered);
    for (VertexId v : heavy_fix.run(sub.graph)) {
      sol.s1.push_back(sub.back_map[v]);
      in_s1[sub.back_map[v]] = 1;
    }
  }
  std::vector<int> residual;
  for (int e : light_uncovered) {
    const Edge& ed = g.edge(e);
    if (!in_s1[ed.u] && !in_s1[ed.v]) residual.push_back(e);
  }
  if (!residual.empty()) {
    auto sub = edge_subgraph(g, residual);
    for (VertexId v : s2_solver.run(sub.graph))
      sol.s2.push_back(sub.back_map[v]);
  }
}

void finalize(const Graph& g, VcSolution& sol) {
  sol.s0 = sorted_unique(std::move(sol.s0));
  sol.s1 = sorted_unique(std::move(sol.s1));
  sol.s2 = sorted_unique(std::move(sol.s2));
  std::vector<VertexId> all;
  all.insert(all.end(), sol.s0.begin(), sol.s0.end());
  all.insert(all.end(), sol.s1.begin(), sol.s1.end());
  all.insert(all.end(), sol.s2.begin(), sol.s2.end());
  sol.cover = sorted_unique(std::move(all));
  sol.weight = 0;
  for (VertexId v : sol.cover) sol.weight += g.vertex_weight(v);
  // Mandatory cover check; an infeasible result here is a bug, not bad luck.
  if (!is_vertex_cover(g, sol.cover))
    throw std::logic_error("learned VC produced an infeasible cover");
}

}  // namespace

std::vector<EdgeClass> classify_edges(const Graph& g, int delta) {
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");
  std::vector<EdgeClass> out(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    int lo = std::min(g.degree(ed.u), g.degree(ed.v));
    int hi = std::max(g.degree(ed.u), g.degree(ed.v));
    if (lo >= delta)
      out[e] = EdgeClass::HeavyHeavy;
    else if (hi >= delta)
      out[e] = EdgeClass::HeavyLight;
    else
      out[e] = EdgeClass::LightLight;
  }
  return out;
}

VcSolution learned_vc(const Graph& g, const PredictionTable& preds,
                      const VcParams& params,
                      const BoundedDegreeSolver& s2_solver) {
  check_preds(g, preds);
  int delta = params.delta();
  VcSolution sol;
  sol.delta = delta;
  sol.votes.assign(g.num_vertices(), -1);

  // Votes first, against the original degrees.
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) >= delta)
      sol.votes[v] = static_cast<int8_t>(majority_vote(g, preds, v));

  std::vector<char> in_s0(g.num_vertices(), 0);
  auto add_s0 = [&](VertexId v) {
    if (!in_s0[v]) {
      in_s0[v] = 1;
      sol.s0.push_back(v);
    }
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (sol.votes[v] < 0) continue;
    if (sol.votes[v] == 1) {
      bool all_heavy_yes = true;
      for (VertexId u : g.neighbors(v)) {
        if (sol.votes[u] != 1) {  // light or voted 0
          all_heavy_yes = false;
          break;
        }
      }
      if (all_heavy_yes) continue;  // deferred to stage 2
      add_s0(v);
    } else {
      for (VertexId u : g.neighbors(v)) add_s0(u);
    }
  }

  run_fix_stages(g, delta, in_s0, default_vc_solver(), s2_solver, sol);
  finalize(g, sol);
  return sol;
}

VcSolution learned_weighted_vc(const Graph& g, const PredictionTable& preds,
                               const VcParams& params,
                               const BoundedDegreeSolver& s2_solver) {
  check_preds(g, preds);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!(g.vertex_weight(v) > 0))
      throw std::domain_error("weighted VC needs positive vertex weights");
  int delta = params.delta();
  double eps10 = std::pow(params.epsilon, 10);
  VcSolution sol;
  sol.delta = delta;
  sol.votes.assign(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) >= delta)
      sol.votes[v] = static_cast<int8_t>(majority_vote(g, preds, v));

  std::vector<char> in_s0(g.num_vertices(), 0);
  auto add_s0 = [&](VertexId v) {
    if (!in_s0[v]) {
      in_s0[v] = 1;
      sol.s0.push_back(v);
    }
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (sol.votes[v] < 0) continue;
    std::vector<VertexId> n_minus;  // light or voted-0 neighbors
    double w_minus = 0;
    bool all_heavy_yes = true;
    for (VertexId u : g.neighbors(v)) {
      if (sol.votes[u] != 1) {
        all_heavy_yes = false;
        n_minus.push_back(u);
        w_minus += g.vertex_weight(u);
      }
    }
    double wv = g.vertex_weight(v);
    if (sol.votes[v] == 1) {
      if (all_heavy_yes) continue;
      // w(v) < w(N^-)/eps^10, cross-multiplied to avoid overflow.
      if (wv * eps10 < w_minus) {
        add_s0(v);
      } else {
        for (VertexId u : n_minus) add_s0(u);
      }
    } else {
      if (wv < eps10 * w_minus) {
        add_s0(v);
      } else {
        for (VertexId u : n_minus) add_s0(u);
      }
    }
  }

  run_fix_stages(g, delta, in_s0, default_weighted_vc_solver(), s2_solver, sol);
  finalize(g, sol);
  return sol;
}

VcPartReport vc_part_report(const Graph& g, const VcSolution& sol,
                            const std::vector<VertexId>& opt) {
  std::vector<char> in_opt(g.num_vertices(), 0);
  for (VertexId v : opt) in_opt[v] = 1;
  VcPartReport r;
  for (VertexId v : sol.s0)
    (in_opt[v] ? r.s0_in_opt : r.s0_off_opt) += g.vertex_weight(v);
  for (VertexId v : sol.s1) r.s1 += g.vertex_weight(v);
  for (VertexId v : sol.s2) r.s2 += g.vertex_weight(v);
  return r;
}

}  // namespace predgraph
