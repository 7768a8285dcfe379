#include "predgraph/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace predgraph {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetTracker {
  long long nodes = 0;
  long long node_limit;
  Clock::time_point deadline;
  bool exceeded = false;

  explicit BudgetTracker(const ExactBudget& b)
      : node_limit(b.node_limit), deadline(Clock::now() + b.time_limit) {}

  bool tick() {
    if (exceeded) return false;
    if (++nodes > node_limit || (nodes % 4096 == 0 && Clock::now() > deadline)) {
      exceeded = true;
      return false;
    }
    return true;
  }
};

// Bitmask vertex-cover solver for n <= 64. Branches on a max-degree vertex:
// either it joins the cover or its whole neighborhood does.
struct VcSolver {
  int n;
  std::vector<std::uint64_t> adj;
  std::vector<double> weight;  // all 1.0 in the unweighted case
  BudgetTracker budget;
  double best_value = std::numeric_limits<double>::infinity();
  std::uint64_t best_cover = 0;

  VcSolver(const Graph& g, bool weighted, const ExactBudget& b)
      : n(g.num_vertices()), adj(g.num_vertices(), 0), budget(b) {
    if (n > 64) throw std::invalid_argument("exact VC limited to n <= 64");
    weight.resize(n, 1.0);
    if (weighted)
      for (int v = 0; v < n; ++v) weight[v] = g.vertex_weight(v);
    for (const auto& e : g.edges()) {
      adj[e.u] |= 1ULL << e.v;
      adj[e.v] |= 1ULL << e.u;
    }
  }

  // Lower bound: greedy matching over the alive subgraph, summing the cheaper
  // endpoint of each matched edge.
  double lower_bound(std::uint64_t alive) const {
    double lb = 0;
    std::uint64_t avail = alive;
    while (avail) {
      int u = std::countr_zero(avail);
      std::uint64_t nb = adj[u] & avail & ~(1ULL << u);
      if (nb) {
        int v = std::countr_zero(nb);
        lb += std::min(weight[u], weight[v]);
        avail &= ~(1ULL << v);
      }
      avail &= ~(1ULL << u);
    }
    return lb;
  }

  void solve(std::uint64_t alive, std::uint64_t cover, double value) {
    if (!budget.tick()) return;
    // Reductions: drop isolated vertices; for degree-1 vertices take the
    // neighbor (optimal when unweighted; in the weighted case only when the
    // neighbor is no heavier).
    bool changed = true;
    while (changed) {
      changed = false;
      std::uint64_t scan = alive;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        if (!((alive >> v) & 1)) continue;  // removed by an earlier reduction
        std::uint64_t nb = adj[v] & alive;
        int d = std::popcount(nb);
        if (d == 0) {
          alive &= ~(1ULL << v);
          changed = true;
        } else if (d == 1) {
          int u = std::countr_zero(nb);
          if (weight[u] <= weight[v]) {
            cover |= 1ULL << u;
            value += weight[u];
            alive &= ~((1ULL << u) | (1ULL << v));
            changed = true;
          }
        }
      }
    }
    if (value >= best_value) return;
    if (alive == 0) {
      best_value = value;
      best_cover = cover;
      return;
    }
    if (value + lower_bound(alive) >= best_value) return;

    // Branch vertex: maximum degree, ties to lowest id.
    int pick = -1, pick_deg = -1;
    std::uint64_t scan = alive;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int d = std::popcount(adj[v] & alive);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    // Branch 1: pick joins the cover.
    solve(alive & ~(1ULL << pick), cover | (1ULL << pick), value + weight[pick]);
    // Branch 2: pick stays out, so all alive neighbors join.
    std::uint64_t nb = adj[pick] & alive;
    double nb_weight = 0;
    std::uint64_t m = nb;
    while (m) {
      nb_weight += weight[std::countr_zero(m)];
      m &= m - 1;
    }
    solve(alive & ~(nb | (1ULL << pick)), cover | nb, value + nb_weight);
  }
};

VertexSetResult run_vc(const Graph& g, bool weighted, const ExactBudget& budget) {
  if (g.num_vertices() > 64) return {};
  VcSolver solver(g, weighted, budget);
  // Greedy warm start: cover every edge by both endpoints.
  std::uint64_t warm = 0;
  double warm_value = 0;
  for (const auto& e : g.edges()) {
    if ((warm & (1ULL << e.u)) || (warm & (1ULL << e.v))) continue;
    for (int v : {e.u, e.v}) {
      warm |= 1ULL << v;
      warm_value += solver.weight[v];
    }
  }
  solver.best_value = warm_value + 1e-12;
  solver.best_cover = warm;
  std::uint64_t all = g.num_vertices() == 64
                          ? ~0ULL
                          : ((1ULL << g.num_vertices()) - 1);
  solver.solve(all, 0, 0);
  if (solver.budget.exceeded) return {};
  VertexSetResult res;
  res.known = true;
  res.value = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (solver.best_cover & (1ULL << v)) {
      res.witness.push_back(v);
      res.value += solver.weight[v];
    }
  }
  if (!is_vertex_cover(g, res.witness))
    throw std::logic_error("exact VC produced an infeasible cover");
  if (!weighted) res.value = static_cast<double>(res.witness.size());
  return res;
}

}  // namespace

VertexSetResult exact_vc(const Graph& g, const ExactBudget& budget) {
  return run_vc(g, false, budget);
}

VertexSetResult exact_weighted_vc(const Graph& g, const ExactBudget& budget) {
  return run_vc(g, true, budget);
}

VertexSetResult exact_mis(const Graph& g, const ExactBudget& budget) {
  auto vc = exact_vc(g, budget);
  if (!vc.known) return {};
  std::vector<char> in_cover(g.num_vertices(), 0);
  for (VertexId v : vc.witness) in_cover[v] = 1;
  VertexSetResult res;
  res.known = true;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!in_cover[v]) res.witness.push_back(v);
  res.value = static_cast<double>(res.witness.size());
  if (!is_independent_set(g, res.witness))
    throw std::logic_error("exact MIS produced a dependent set");
  return res;
}

IndexSetResult exact_set_cover(const SetSystem& ss, const ExactBudget& budget) {
  ss.validate();
  int m = ss.m, n = ss.num_sets();
  if (m <= 24) {
    // DP over element masks, expanding only sets that contain the lowest
    // uncovered element.
    std::vector<std::uint32_t> set_mask(n, 0);
    for (int j = 0; j < n; ++j)
      for (int e : ss.sets[j]) set_mask[j] |= 1u << e;
    std::vector<std::vector<int>> sets_with(m);
    for (int j = 0; j < n; ++j)
      for (int e : ss.sets[j]) sets_with[e].push_back(j);
    std::uint32_t full = (1u << m) - 1;
    std::vector<std::uint8_t> dp(static_cast<size_t>(full) + 1, 255);
    std::vector<std::int16_t> choice(static_cast<size_t>(full) + 1, -1);
    std::vector<std::uint32_t> parent(static_cast<size_t>(full) + 1, 0);
    dp[0] = 0;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      if (dp[mask] == 255) continue;
      int low = std::countr_zero(~mask & full);
      for (int j : sets_with[low]) {
        std::uint32_t nm = mask | set_mask[j];
        if (dp[mask] + 1 < dp[nm]) {
          dp[nm] = dp[mask] + 1;
          choice[nm] = static_cast<std::int16_t>(j);
          parent[nm] = mask;
        }
      }
    }
    IndexSetResult res;
    res.known = true;
    res.value = dp[full];
    for (std::uint32_t mask = full; mask;) {
      res.witness.push_back(choice[mask]);
      mask = parent[mask];
    }
    std::sort(res.witness.begin(), res.witness.end());
    if (!is_set_cover(ss, res.witness) ||
        static_cast<double>(res.witness.size()) != res.value)
      throw std::logic_error("set-cover DP reconstruction failed");
    return res;
  }

  // Branch and bound for larger universes: branch on the lowest uncovered
  // element, trying every set containing it.
  std::vector<std::vector<int>> sets_with(m);
  for (int j = 0; j < n; ++j)
    for (int e : ss.sets[j]) sets_with[e].push_back(j);
  int max_size = 0;
  for (int j = 0; j < n; ++j) max_size = std::max(max_size, ss.set_size(j));
  BudgetTracker tracker(budget);
  std::vector<int> best;
  int best_size = n + 1;
  std::vector<char> covered(m, 0);
  std::vector<int> chosen;
  int uncovered = m;
  auto recurse = [&](auto&& self) -> void {
    if (!tracker.tick()) return;
    if (uncovered == 0) {
      if (static_cast<int>(chosen.size()) < best_size) {
        best_size = static_cast<int>(chosen.size());
        best = chosen;
      }
      return;
    }
    int lb = (uncovered + max_size - 1) / max_size;
    if (static_cast<int>(chosen.size()) + lb >= best_size) return;
    int low = 0;
    while (covered[low]) ++low;
    for (int j : sets_with[low]) {
      std::vector<int> newly;
      for (int e : ss.sets[j])
        if (!covered[e]) {
          covered[e] = 1;
          newly.push_back(e);
        }
      uncovered -= static_cast<int>(newly.size());
      chosen.push_back(j);
      self(self);
      chosen.pop_back();
      uncovered += static_cast<int>(newly.size());
      for (int e : newly) covered[e] = 0;
    }
  };
  recurse(recurse);
  if (tracker.exceeded) return {};
  IndexSetResult res;
  res.known = true;
  res.witness = best;
  std::sort(res.witness.begin(), res.witness.end());
  res.value = static_cast<double>(best.size());
  return res;
}

AssignmentResult exact_maxcut(const Graph& g, const ExactBudget& budget) {
  int n = g.num_vertices();
  if (n > 26) return {};
  if (n == 0) {
    AssignmentResult res;
    res.known = true;
    return res;
  }
  BudgetTracker tracker(budget);
  std::vector<int8_t> x(n, -1);
  double cur = 0;
  double best = 0;
  std::vector<int8_t> best_x = x;
  // Gray-code walk over all assignments with x[n-1] fixed (cut is symmetric
  // under global sign flip).
  std::uint64_t states = n == 1 ? 1 : (1ULL << (n - 1));
  for (std::uint64_t i = 1; i < states; ++i) {
    if (!tracker.tick()) return {};
    int v = std::countr_zero(i);
    // Flip v; adjust the cut incrementally.
    for (int e : g.incident_edges(v)) {
      const Edge& ed = g.edge(e);
      VertexId u = ed.u == v ? ed.v : ed.u;
      if (x[u] == x[v])
        cur += ed.w;  // edge becomes cut
      else
        cur -= ed.w;
    }
    x[v] = static_cast<int8_t>(-x[v]);
    if (cur > best) {
      best = cur;
      best_x = x;
    }
  }
  AssignmentResult res;
  res.known = true;
  res.value = best;
  res.witness = best_x;
  if (std::abs(cut_value(g, best_x) - best) > 1e-9)
    throw std::logic_error("maxcut incremental value drifted");
  return res;
}

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : cover) in[v] = 1;
  for (const auto& e : g.edges())
    if (!in[e.u] && !in[e.v]) return false;
  return true;
}

bool is_independent_set(const Graph& g, const std::vector<VertexId>& set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : set) in[v] = 1;
  for (const auto& e : g.edges())
    if (in[e.u] && in[e.v]) return false;
  return true;
}

bool is_set_cover(const SetSystem& ss, const std::vector<int>& chosen) {
  std::vector<char> covered(ss.m, 0);
  for (int j : chosen) {
    if (j < 0 || j >= ss.num_sets()) return false;
    for (int e : ss.sets[j]) covered[e] = 1;
  }
  for (int i = 0; i < ss.m; ++i)
    if (!covered[i]) return false;
  return true;
}

double cut_value(const Graph& g, const std::vector<int8_t>& assignment) {
  if (static_cast<int>(assignment.size()) != g.num_vertices())
    throw std::invalid_argument("assignment size != n");
  double v = 0;
  for (const auto& e : g.edges())
    if (assignment[e.u] != assignment[e.v]) v += e.w;
  return v;
}

}  // namespace predgraph
