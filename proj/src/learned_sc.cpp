#include "predgraph/learned_sc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "predgraph/baselines.hpp"
#include "predgraph/exact.hpp"

namespace predgraph {

ScSolution learned_set_cover(const SetSystem& ss, const PredictionTable& preds,
                             double eps, std::optional<int> delta_override) {
  ss.validate();
  if (static_cast<int>(preds.set_bits.size()) != ss.num_sets())
    throw std::domain_error("prediction table does not match set system");
  for (int j = 0; j < ss.num_sets(); ++j)
    if (preds.set_bits[j].size() != ss.sets[j].size())
      throw std::domain_error("missing prediction bits for set " +
                              std::to_string(j));
  int delta;
  if (delta_override) {
    delta = std::max(1, *delta_override);
  } else {
    if (!(eps > 0) || !(eps < 0.5))
      throw std::domain_error("epsilon must lie strictly in (0, 1/2)");
    delta = std::max(1, static_cast<int>(std::ceil(
                            100.0 * std::log(1.0 / eps) / (eps * eps))));
  }

  ScSolution sol;
  sol.delta = delta;

  // Decreasing size, equal sizes by ascending index.
  std::vector<int> order(ss.num_sets());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ss.set_size(a) > ss.set_size(b);
  });

  std::vector<char> covered_l(ss.m, 0);
  for (int j : order) {
    if (ss.set_size(j) < delta) continue;
    if (majority(preds.set_bits[j]) != 1) continue;
    bool redundant = true;
    for (int e : ss.sets[j])
      if (!covered_l[e]) {
        redundant = false;
        break;
      }
    if (redundant) continue;
    sol.j_l.push_back(j);
    for (int e : ss.sets[j]) covered_l[e] = 1;
  }
  std::sort(sol.j_l.begin(), sol.j_l.end());
  for (int i = 0; i < ss.m; ++i)
    if (covered_l[i]) sol.i_l.push_back(i);

  std::vector<int> light;
  for (int j = 0; j < ss.num_sets(); ++j)
    if (ss.set_size(j) < delta) light.push_back(j);

  std::vector<char> light_reach(ss.m, 0);
  for (int j : light)
    for (int e : ss.sets[j]) light_reach[e] = 1;
  for (int i = 0; i < ss.m; ++i)
    if (light_reach[i] && !covered_l[i]) sol.i_a.push_back(i);

  sol.j_a = greedy_set_cover(ss, sol.i_a, light);

  std::vector<int> remaining;
  {
    std::vector<char> handled = covered_l;
    for (int i : sol.i_a) handled[i] = 1;
    for (int i = 0; i < ss.m; ++i)
      if (!handled[i]) remaining.push_back(i);
  }
  std::vector<int> all_sets(ss.num_sets());
  std::iota(all_sets.begin(), all_sets.end(), 0);
  sol.j_f = greedy_set_cover(ss, remaining, all_sets);

  std::vector<int> chosen = sol.j_l;
  chosen.insert(chosen.end(), sol.j_a.begin(), sol.j_a.end());
  chosen.insert(chosen.end(), sol.j_f.begin(), sol.j_f.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  sol.chosen = std::move(chosen);

  if (!is_set_cover(ss, sol.chosen))
    throw std::logic_error("learned set cover left elements uncovered");
  return sol;
}

ScPartReport sc_part_report(const SetSystem& ss, const ScSolution& sol,
                            const std::vector<int>& opt) {
  std::vector<char> in_opt(ss.num_sets(), 0);
  for (int j : opt) in_opt[j] = 1;
  std::vector<char> in_jl(ss.num_sets(), 0);
  for (int j : sol.j_l) in_jl[j] = 1;
  ScPartReport r;
  for (int j : sol.j_l)
    if (!(in_opt[j] && ss.set_size(j) >= sol.delta)) ++r.false_positives;
  for (int j : opt)
    if (ss.set_size(j) >= sol.delta && !in_jl[j])
      r.false_negative_mass += ss.set_size(j);
  r.j_a_size = static_cast<int>(sol.j_a.size());
  r.j_f_size = static_cast<int>(sol.j_f.size());
  return r;
}

}  // namespace predgraph
