#include "predgraph/learned_maxcut.hpp"

#include <algorithm>
#include <stdexcept>

#include "predgraph/baselines.hpp"
#include "predgraph/exact.hpp"

namespace predgraph {

namespace {

Eigen::VectorXd clamp_box(Eigen::VectorXd x) {
  return x.cwiseMax(-1.0).cwiseMin(1.0);
}

Eigen::VectorXd sign_vec(const Eigen::VectorXd& v) {
  Eigen::VectorXd s(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    s[i] = v[i] > 0 ? 1.0 : (v[i] < 0 ? -1.0 : 0.0);
  return s;
}

// Exact coordinate descent on the piecewise-linear objective: for each
// coordinate, evaluate the box ends and every kink of |Az - Ax|_1 in x_i.
void coordinate_polish(const Eigen::MatrixXd& a, const Eigen::VectorXd& az,
                       const Eigen::VectorXd& z, Eigen::VectorXd& x,
                       double& fx) {
  const Eigen::Index n = a.rows();
  auto f = [&](const Eigen::VectorXd& v) { return box_objective(a, z, v); };
  for (int pass = 0; pass < 64; ++pass) {
    bool improved = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      std::vector<double> cands{-1.0, 1.0, x[i]};
      for (Eigen::Index k = 0; k < n; ++k) {
        double aki = a(k, i);
        if (aki == 0) continue;
        // Residual of row k with x_i removed; kink where it crosses zero.
        double r = az[k] - a.row(k).dot(x) + aki * x[i];
        double t = r / aki;
        if (t >= -1 && t <= 1) cands.push_back(t);
      }
      double best_xi = x[i], best_f = fx;
      Eigen::VectorXd trial = x;
      for (double c : cands) {
        trial[i] = c;
        double fc = f(trial);
        if (fc < best_f - 1e-15) {
          best_f = fc;
          best_xi = c;
        }
      }
      if (best_xi != x[i]) {
        x[i] = best_xi;
        fx = best_f;
        improved = true;
      }
    }
    if (!improved) break;
  }
}

}  // namespace

WideNarrowTags classify_wide_narrow(const Graph& g, int delta, double eta) {
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");
  if (!(eta > 0) || !(eta < 1)) throw std::domain_error("eta must be in (0,1)");
  WideNarrowTags tags;
  tags.wide.assign(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident_edges(v);
    std::vector<int> order(inc.begin(), inc.end());
    // Heaviest first; equal weights by edge index.
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (g.edge(a).w != g.edge(b).w) return g.edge(a).w > g.edge(b).w;
      return a < b;
    });
    double prefix = 0;
    for (size_t i = 0; i < order.size() && i < static_cast<size_t>(delta); ++i)
      prefix += g.edge(order[i]).w;
    double wd = g.weighted_degree(v);
    tags.total_weight += wd;
    bool wide = prefix <= eta * wd;
    tags.wide[v] = wide;
    if (!wide) tags.narrow_weight += wd;
  }
  tags.graph_wide = tags.narrow_weight <= eta * tags.total_weight;
  return tags;
}

Eigen::MatrixXd truncate_matrix(const Graph& g, const WideNarrowTags& tags,
                                int delta, double eta) {
  const int n = g.num_vertices();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (!tags.wide[i]) continue;  // narrow rows stay zero
    double cap = eta * g.weighted_degree(i) / delta;
    for (int e : g.incident_edges(i)) {
      int j = g.opposite(e, i);
      a(i, j) = std::min(g.edge(e).w, cap);
    }
  }
  return a;
}

double box_objective(const Eigen::MatrixXd& a_tilde, const Eigen::VectorXd& z,
                     const Eigen::VectorXd& x) {
  Eigen::VectorXd az = a_tilde * z;
  return x.dot(az) + (az - a_tilde * x).lpNorm<1>();
}

Eigen::VectorXd solve_box_convex(const Eigen::MatrixXd& a_tilde,
                                 const Eigen::VectorXd& z,
                                 const MaxcutParams& params) {
  const Eigen::Index n = a_tilde.rows();
  if (a_tilde.cols() != n || z.size() != n)
    throw std::invalid_argument("dimension mismatch");
  Eigen::VectorXd az = a_tilde * z;
  if (!az.allFinite()) throw std::runtime_error("non-finite values in A*z");

  auto f = [&](const Eigen::VectorXd& x) {
    return x.dot(az) + (az - a_tilde * x).lpNorm<1>();
  };

  std::vector<Eigen::VectorXd> starts{clamp_box(z), clamp_box(sign_vec(z)),
                                      Eigen::VectorXd::Zero(n)};
  Eigen::VectorXd best = starts[0];
  double best_f = f(best);
  for (const auto& s : starts) {
    double fs = f(s);
    if (fs < best_f) {
      best_f = fs;
      best = s;
    }
  }

  for (const auto& start : starts) {
    for (double scale : params.step_scales) {
      Eigen::VectorXd x = start;
      for (int t = 1; t <= params.iters; ++t) {
        Eigen::VectorXd s = sign_vec(az - a_tilde * x);
        Eigen::VectorXd grad = az - a_tilde.transpose() * s;
        x = clamp_box(x - (scale / std::sqrt(double(t))) * grad);
        double fx = f(x);
        if (!std::isfinite(fx))
          throw std::runtime_error("non-finite objective in subgradient loop");
        if (fx < best_f) {
          best_f = fx;
          best = x;
        }
      }
    }
    // Polish the start directly too; cheap and catches flat regions.
    Eigen::VectorXd xs = start;
    double fxs = f(xs);
    coordinate_polish(a_tilde, az, z, xs, fxs);
    if (fxs < best_f) {
      best_f = fxs;
      best = xs;
    }
  }
  coordinate_polish(a_tilde, az, z, best, best_f);
  return best;
}

Eigen::VectorXd sequential_rounding(const Eigen::MatrixXd& a_tilde,
                                    const Eigen::VectorXd& x) {
  const Eigen::Index n = a_tilde.rows();
  if (x.size() != n) throw std::invalid_argument("dimension mismatch");
  Eigen::VectorXd v = x;
  for (Eigen::Index i = 0; i < n; ++i) {
    // Coefficient of v_i in v^T A v (diagonal is zero for graphs).
    double c = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) c += (a_tilde(i, j) + a_tilde(j, i)) * v[j];
    v[i] = c > 0 ? -1.0 : 1.0;  // tie -> +1
  }
  return v;
}

MaxcutSolution learned_maxcut(const Graph& g, const PredictionTable& preds,
                              const MaxcutParams& params) {
  if (preds.domain != PredictionTable::Domain::Sign)
    throw std::invalid_argument("MaxCut needs sign-domain predictions");
  const int n = g.num_vertices();
  int delta = params.delta();

  auto zs = aggregate_z(g, preds, params.epsilon);
  Eigen::VectorXd z = Eigen::Map<const Eigen::VectorXd>(zs.data(), n);
  auto tags = classify_wide_narrow(g, delta, params.eta);
  Eigen::MatrixXd a_tilde = truncate_matrix(g, tags, delta, params.eta);
  Eigen::VectorXd x = solve_box_convex(a_tilde, z, params);
  Eigen::VectorXd y = sequential_rounding(a_tilde, x);

  std::vector<int8_t> learned(n);
  for (int i = 0; i < n; ++i) learned[i] = y[i] > 0 ? 1 : -1;

  MaxcutSolution sol;
  sol.graph_wide = tags.graph_wide;
  sol.learned_value = cut_value(g, learned);
  auto ls = maxcut_local_search(g);
  sol.local_search_value = ls.value;
  // Best-of combiner: both candidates scored on the true adjacency.
  if (sol.learned_value >= sol.local_search_value) {
    sol.assignment = std::move(learned);
    sol.value = sol.learned_value;
    sol.learned_won = true;
  } else {
    sol.assignment = std::move(ls.assignment);
    sol.value = sol.local_search_value;
  }
  return sol;
}

}  // namespace predgraph
