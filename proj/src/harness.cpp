#include "predgraph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "predgraph/baselines.hpp"
#include "predgraph/exact.hpp"
#include "predgraph/learned_maxcut.hpp"
#include "predgraph/learned_mis.hpp"
#include "predgraph/learned_sc.hpp"
#include "predgraph/learned_vc.hpp"
#include "predgraph/rng.hpp"

namespace predgraph {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::map<std::string, std::string> parse_kv(const std::string& s, char sep) {
  std::map<std::string, std::string> kv;
  for (const auto& part : split(s, sep)) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value, got '" + part + "'");
    kv[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
  }
  return kv;
}

double kv_double(const std::map<std::string, std::string>& kv,
                 const std::string& key, std::optional<double> def = {}) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (def) return *def;
    throw std::invalid_argument("missing key '" + key + "'");
  }
  return std::stod(it->second);
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// Holds whichever instance kind the experiment operates on.
struct Instance {
  std::optional<Graph> graph;
  std::optional<SetSystem> ss;
};

// Planted MIS instance tuned so the independent part is high-degree (votable)
// while min-degree greedy gets drawn to decoys and cover vertices.
Graph gen_planted_mis_graph(int n_ind, int n_cover, int ind_attach,
                            double p_cc, int decoy_pairs, std::uint64_t seed) {
  if (n_ind < 1 || n_cover < 1) throw std::invalid_argument("bad sizes");
  if (ind_attach > n_cover) throw std::invalid_argument("ind_attach > n_cover");
  int n = n_ind + n_cover + 2 * decoy_pairs;
  SplitMix rng(splitmix64(seed ^ 0x6d69735f696e7374ULL));
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  auto add = [&](int u, int v) {
    auto key = std::minmax(u, v);
    if (seen.insert(key).second) edges.push_back({u, v, 1.0});
  };
  // Independent vertices [0, n_ind); cover [n_ind, n_ind+n_cover);
  // decoys after that in pairs.
  for (int i = 0; i < n_ind; ++i) {
    // ind_attach distinct cover neighbors per independent vertex.
    std::vector<int> cov(n_cover);
    std::iota(cov.begin(), cov.end(), n_ind);
    for (int k = 0; k < ind_attach; ++k) {
      int pick = k + static_cast<int>(rng.next_below(n_cover - k));
      std::swap(cov[k], cov[pick]);
      add(i, cov[k]);
    }
  }
  for (int u = n_ind; u < n_ind + n_cover; ++u)
    for (int v = u + 1; v < n_ind + n_cover; ++v)
      if (rng.next_double() < p_cc) add(u, v);
  int base = n_ind + n_cover;
  for (int d = 0; d < decoy_pairs; ++d) {
    int a = base + 2 * d, b = base + 2 * d + 1;
    add(a, b);
    // Each decoy leans on two distinct independent vertices.
    for (int dv : {a, b}) {
      int i1 = static_cast<int>(rng.next_below(n_ind));
      int i2 = static_cast<int>(rng.next_below(n_ind));
      if (i2 == i1) i2 = (i1 + 1) % n_ind;
      add(dv, i1);
      add(dv, i2);
    }
  }
  return Graph(n, std::move(edges));
}

// Planted set cover: k disjoint optimal sets of size block each (covering
// [m] exactly), plus decoy sets of assorted sizes.
SetSystem gen_planted_sc(int m, int k, int decoys, std::uint64_t seed) {
  if (k < 1 || m % k != 0) throw std::invalid_argument("k must divide m");
  SplitMix rng(splitmix64(seed ^ 0x73635f696e7374ULL));
  SetSystem ss;
  ss.m = m;
  int block = m / k;
  for (int j = 0; j < k; ++j) {
    std::vector<int> s(block);
    std::iota(s.begin(), s.end(), j * block);
    ss.sets.push_back(std::move(s));
  }
  for (int d = 0; d < decoys; ++d) {
    // Random size between block/2 and block+2, random elements.
    int size = std::max(2, block / 2 + static_cast<int>(rng.next_below(block / 2 + 3)));
    std::set<int> s;
    while (static_cast<int>(s.size()) < size)
      s.insert(static_cast<int>(rng.next_below(m)));
    ss.sets.emplace_back(s.begin(), s.end());
  }
  ss.validate();
  return ss;
}

Instance build_instance(const ExperimentConfig& cfg) {
  Instance inst;
  auto colon = cfg.instance.find(':');
  std::string kind = colon == std::string::npos ? cfg.instance
                                                : cfg.instance.substr(0, colon);
  std::string rest = colon == std::string::npos ? ""
                                                : cfg.instance.substr(colon + 1);
  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) throw std::runtime_error("cannot open " + rest);
    inst.graph = load_edge_list(in, cfg.problem == "maxcut" || cfg.problem == "wvc");
  } else if (kind == "scfile") {
    std::ifstream in(rest);
    if (!in) throw std::runtime_error("cannot open " + rest);
    inst.ss = load_set_system(in);
  } else if (kind == "er") {
    auto kv = parse_kv(rest, ',');
    inst.graph = gen_er_graph(static_cast<int>(kv_double(kv, "n")),
                              kv_double(kv, "p"),
                              static_cast<std::uint64_t>(kv_double(kv, "seed", 1)));
  } else if (kind == "planted-vc") {
    auto kv = parse_kv(rest, ',');
    auto planted = gen_planted_vc(
        static_cast<int>(kv_double(kv, "cover")),
        static_cast<int>(kv_double(kv, "free")), kv_double(kv, "p", 0.0),
        static_cast<std::uint64_t>(kv_double(kv, "seed", 1)));
    if (cfg.problem == "wvc") {
      double wmax = kv_double(kv, "wmax", 10.0);
      SplitMix rng(splitmix64(
          static_cast<std::uint64_t>(kv_double(kv, "seed", 1)) ^ 0x77ULL));
      std::vector<double> vw(planted.graph.num_vertices());
      for (auto& w : vw) w = 1.0 + (wmax - 1.0) * rng.next_double();
      inst.graph = Graph(planted.graph.num_vertices(), planted.graph.edges(), vw);
    } else {
      inst.graph = std::move(planted.graph);
    }
  } else if (kind == "planted-mis") {
    auto kv = parse_kv(rest, ',');
    inst.graph = gen_planted_mis_graph(
        static_cast<int>(kv_double(kv, "ind")),
        static_cast<int>(kv_double(kv, "cover")),
        static_cast<int>(kv_double(kv, "attach")), kv_double(kv, "pcc", 0.2),
        static_cast<int>(kv_double(kv, "decoys", 0)),
        static_cast<std::uint64_t>(kv_double(kv, "seed", 1)));
  } else if (kind == "planted-sc") {
    auto kv = parse_kv(rest, ',');
    inst.ss = gen_planted_sc(static_cast<int>(kv_double(kv, "m")),
                             static_cast<int>(kv_double(kv, "k")),
                             static_cast<int>(kv_double(kv, "decoys", 0)),
                             static_cast<std::uint64_t>(kv_double(kv, "seed", 1)));
  } else {
    throw std::invalid_argument("unknown instance kind '" + kind + "'");
  }
  return inst;
}

struct OracleInfo {
  bool known = false;
  double opt = 0;
  GroundTruth truth;
};

OracleInfo compute_oracle(const std::string& problem, const Instance& inst) {
  OracleInfo o;
  if (problem == "vc") {
    auto r = exact_vc(*inst.graph);
    if (r.known) {
      o = {true, r.value, {ProblemTag::VertexCover, r.witness, {}}};
    }
  } else if (problem == "wvc") {
    auto r = exact_weighted_vc(*inst.graph);
    if (r.known)
      o = {true, r.value, {ProblemTag::WeightedVertexCover, r.witness, {}}};
  } else if (problem == "mis") {
    auto r = exact_mis(*inst.graph);
    if (r.known) o = {true, r.value, {ProblemTag::Mis, r.witness, {}}};
  } else if (problem == "sc") {
    auto r = exact_set_cover(*inst.ss);
    if (r.known) o = {true, r.value, {ProblemTag::SetCover, r.witness, {}}};
  } else if (problem == "maxcut") {
    auto r = exact_maxcut(*inst.graph);
    if (r.known) o = {true, r.value, {ProblemTag::MaxCut, {}, r.witness}};
  } else {
    throw std::invalid_argument("unknown problem '" + problem + "'");
  }
  return o;
}

// Runs one (algorithm, epsilon, seed) trial; throws on infeasible output.
double run_algorithm(const std::string& problem, const std::string& algo,
                     const Instance& inst, const OracleInfo& oracle,
                     double eps, std::optional<int> delta_override,
                     std::uint64_t seed) {
  auto need_truth = [&]() -> const GroundTruth& {
    if (!oracle.known)
      throw std::runtime_error("optimum unknown; cannot generate predictions");
    return oracle.truth;
  };
  if (problem == "vc" || problem == "wvc") {
    const Graph& g = *inst.graph;
    std::vector<VertexId> cover;
    double value = 0;
    if (algo == "learned-vc" || algo == "learned-wvc") {
      auto preds = gen_vc_predictions(g, need_truth(), eps, seed);
      VcParams p{eps, delta_override};
      auto sol = (algo == "learned-wvc") ? learned_weighted_vc(g, preds, p)
                                         : learned_vc(g, preds, p);
      cover = sol.cover;
      value = sol.weight;
    } else if (algo == "vc2") {
      cover = vc_2approx_matching(g);
      value = static_cast<double>(cover.size());
    } else if (algo == "wvc2") {
      cover = weighted_vc_2approx(g);
      for (VertexId v : cover) value += g.vertex_weight(v);
    } else {
      throw std::invalid_argument("unknown algorithm '" + algo + "'");
    }
    if (!is_vertex_cover(g, cover))
      throw std::logic_error("infeasible cover from " + algo);
    return value;
  }
  if (problem == "mis") {
    const Graph& g = *inst.graph;
    std::vector<VertexId> set;
    if (algo == "learned-mis") {
      auto preds = gen_mis_predictions(g, need_truth(), eps, seed);
      MisParams p{eps, delta_override, /*allow_large_epsilon=*/true};
      set = learned_mis(g, preds, p).chosen;
    } else if (algo == "pred-only-mis") {
      auto preds = gen_mis_predictions(g, need_truth(), eps, seed);
      set = mis_predictions_only(g, preds);
    } else if (algo == "greedy-mis") {
      set = greedy_mis_min_degree(g);
    } else {
      throw std::invalid_argument("unknown algorithm '" + algo + "'");
    }
    if (!is_independent_set(g, set))
      throw std::logic_error("dependent set from " + algo);
    return static_cast<double>(set.size());
  }
  if (problem == "sc") {
    const SetSystem& ss = *inst.ss;
    std::vector<int> chosen;
    if (algo == "learned-sc") {
      auto preds = gen_sc_predictions(ss, need_truth(), eps, seed);
      chosen = learned_set_cover(ss, preds, eps, delta_override).chosen;
    } else if (algo == "greedy-sc") {
      std::vector<int> universe(ss.m), all(ss.num_sets());
      std::iota(universe.begin(), universe.end(), 0);
      std::iota(all.begin(), all.end(), 0);
      chosen = greedy_set_cover(ss, universe, all);
    } else {
      throw std::invalid_argument("unknown algorithm '" + algo + "'");
    }
    if (!is_set_cover(ss, chosen))
      throw std::logic_error("infeasible cover from " + algo);
    return static_cast<double>(chosen.size());
  }
  if (problem == "maxcut") {
    const Graph& g = *inst.graph;
    if (algo == "learned-maxcut") {
      auto preds = gen_maxcut_predictions(g, need_truth(), eps, seed);
      MaxcutParams p;
      p.epsilon = eps;
      p.delta_override = delta_override;
      auto sol = learned_maxcut(g, preds, p);
      if (std::abs(cut_value(g, sol.assignment) - sol.value) > 1e-9)
        throw std::logic_error("cut value mismatch from " + algo);
      return sol.value;
    }
    if (algo == "ls-maxcut") return maxcut_local_search(g).value;
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
  throw std::invalid_argument("unknown problem '" + problem + "'");
}

int worker_count() {
  if (const char* env = std::getenv("PREDGRAPH_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return from_stream(in);
}

ExperimentConfig ExperimentConfig::from_stream(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line without '=': " + line);
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "problem") cfg.problem = val;
    else if (key == "dataset") cfg.dataset = val;
    else if (key == "instance") cfg.instance = val;
    else if (key == "algorithms" || key == "algos") cfg.algorithms = split(val, ',');
    else if (key == "epsilons") {
      cfg.epsilons.clear();
      for (const auto& e : split(val, ',')) cfg.epsilons.push_back(std::stod(e));
    }
    else if (key == "delta_override" || key == "delta") cfg.delta_override = std::stoi(val);
    else if (key == "trials") cfg.trials = std::stoi(val);
    else if (key == "base_seed" || key == "seed") cfg.base_seed = std::stoull(val);
    else if (key == "output_path" || key == "output") cfg.output_path = val;
    else if (key == "runtime_in_csv") cfg.runtime_in_csv = (val == "1" || val == "true");
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
  if (cfg.problem.empty() || cfg.instance.empty() || cfg.algorithms.empty() ||
      cfg.epsilons.empty())
    throw std::invalid_argument("config needs problem, instance, algos, epsilons");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  Instance inst = build_instance(cfg);
  OracleInfo oracle = compute_oracle(cfg.problem, inst);

  struct Job {
    int algo_idx, eps_idx, trial;
  };
  std::vector<Job> jobs;
  for (int a = 0; a < static_cast<int>(cfg.algorithms.size()); ++a)
    for (int e = 0; e < static_cast<int>(cfg.epsilons.size()); ++e)
      for (int t = 0; t < cfg.trials; ++t) jobs.push_back({a, e, t});

  std::vector<TrialRecord> records(jobs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      const Job& job = jobs[i];
      TrialRecord& rec = records[i];
      rec.problem = cfg.problem;
      rec.dataset = cfg.dataset;
      rec.algorithm = cfg.algorithms[job.algo_idx];
      rec.epsilon = cfg.epsilons[job.eps_idx];
      rec.delta = [&] {
        // Effective degree threshold for this cell; 0 for threshold-free
        // baselines.
        if (rec.algorithm.rfind("learned-", 0) != 0) return 0;
        if (cfg.problem == "mis")
          return MisParams{rec.epsilon, cfg.delta_override}.delta();
        if (cfg.problem == "maxcut") {
          MaxcutParams p;
          p.epsilon = rec.epsilon;
          p.delta_override = cfg.delta_override;
          return p.delta();
        }
        return VcParams{rec.epsilon, cfg.delta_override}.delta();
      }();
      rec.trial = job.trial;
      rec.seed = hash_combine(cfg.base_seed, job.eps_idx, job.trial);
      auto t0 = std::chrono::steady_clock::now();
      try {
        rec.value = run_algorithm(cfg.problem, rec.algorithm, inst, oracle,
                                  rec.epsilon, cfg.delta_override, rec.seed);
        if (oracle.known) {
          rec.opt = oracle.opt;
          // Ratio orientation: >= 1 for minimization, <= 1 for maximization.
          if (oracle.opt != 0) rec.ratio = rec.value / oracle.opt;
        }
      } catch (const std::exception& ex) {
        rec.error = ex.what();
      }
      rec.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    }
  };
  int workers = std::min<int>(worker_count(), static_cast<int>(jobs.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  ExperimentResult res;
  res.records = std::move(records);
  res.summaries = summarize(res.records);
  return res;
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                       bool runtime_in_csv) {
  out << "problem,dataset,algorithm,epsilon,delta,trial,seed,value,opt,ratio,"
         "runtime_ms\n";
  for (const auto& r : records) {
    out << r.problem << ',' << r.dataset << ',' << r.algorithm << ','
        << fmt_g(r.epsilon) << ',' << r.delta << ',' << r.trial << ',' << r.seed
        << ',';
    if (r.error.empty()) {
      out << fmt_g(r.value) << ','
          << (r.opt ? fmt_g(*r.opt) : std::string()) << ','
          << (r.ratio ? fmt_g(*r.ratio) : std::string()) << ',';
    } else {
      out << "error:" << r.error << ",,,";
    }
    if (runtime_in_csv)
      out << fmt_g(r.runtime_ms);
    else
      out << 0;
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out,
                       const std::vector<CellSummary>& summaries) {
  out << "problem,algorithm,epsilon,count,mean_ratio,std_ratio,ci_low,ci_high\n";
  for (const auto& s : summaries)
    out << s.problem << ',' << s.algorithm << ',' << fmt_g(s.epsilon) << ','
        << s.count << ',' << fmt_g(s.mean) << ',' << fmt_g(s.stddev) << ','
        << fmt_g(s.ci_low) << ',' << fmt_g(s.ci_high) << '\n';
}

std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records) {
  std::map<std::tuple<std::string, std::string, double>, std::vector<double>>
      cells;
  for (const auto& r : records) {
    if (!r.error.empty() || !r.ratio) continue;
    cells[{r.problem, r.algorithm, r.epsilon}].push_back(*r.ratio);
  }
  std::vector<CellSummary> out;
  for (const auto& [key, vals] : cells) {
    CellSummary s;
    s.problem = std::get<0>(key);
    s.algorithm = std::get<1>(key);
    s.epsilon = std::get<2>(key);
    s.count = static_cast<int>(vals.size());
    double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
    double var = 0;
    for (double v : vals) var += (v - mean) * (v - mean);
    s.mean = mean;
    s.stddev = vals.size() > 1 ? std::sqrt(var / (vals.size() - 1)) : 0.0;
    auto ci = bootstrap_mean_ci(vals);
    s.ci_low = ci.first;
    s.ci_high = ci.second;
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Inverse normal CDF via bisection on erfc; plenty accurate for CI levels.
double normal_quantile(double p) {
  double lo = -10, hi = 10;
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

std::pair<double, double> bootstrap_mean_ci(const std::vector<double>& samples,
                                            double level, int resamples,
                                            std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("empty sample");
  SplitMix rng(seed);
  std::vector<double> means(resamples);
  for (int r = 0; r < resamples; ++r) {
    double s = 0;
    for (size_t i = 0; i < samples.size(); ++i)
      s += samples[rng.next_below(samples.size())];
    means[r] = s / samples.size();
  }
  // Expanded percentile interval (Hesterberg): widen the plain percentile
  // quantiles by the t/normal ratio so small samples do not undercover.
  std::sort(means.begin(), means.end());
  size_t n = samples.size();
  double alpha = (1.0 - level) / 2.0;
  if (n >= 2) {
    double z = normal_quantile(1.0 - alpha);
    double df = static_cast<double>(n - 1);
    // Cornish-Fisher expansion of the Student-t quantile around z.
    double t = z + (z * z * z + z) / (4.0 * df) +
               (5 * std::pow(z, 5) + 16 * z * z * z + 3 * z) / (96.0 * df * df);
    double adj = normal_cdf(-std::sqrt(n / df) * t);
    alpha = std::min(adj, 0.5);
  }
  auto idx = [&](double q) {
    return std::clamp<long>(std::lround(q * (resamples - 1)), 0, resamples - 1);
  };
  return {means[idx(alpha)], means[idx(1.0 - alpha)]};
}

}  // namespace predgraph
