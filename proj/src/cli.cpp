#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "predgraph/baselines.hpp"
#include "predgraph/exact.hpp"
#include "predgraph/harness.hpp"
#include "predgraph/learned_maxcut.hpp"
#include "predgraph/learned_mis.hpp"
#include "predgraph/learned_sc.hpp"
#include "predgraph/learned_vc.hpp"
#include "predgraph/rng.hpp"

namespace predgraph {

namespace {

Graph load_graph_file(const std::string& path, bool weighted,
                      std::vector<std::string>* labels = nullptr) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in, weighted, labels);
}

SetSystem load_ss_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_set_system(in);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

void cmd_gen_graph(const std::string& kind, int n, double p, int cover,
                   int free_v, std::uint64_t seed, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  Graph g = [&] {
    if (kind == "er") return gen_er_graph(n, p, seed);
    if (kind == "planted-vc") return gen_planted_vc(cover, free_v, p, seed).graph;
    throw CLI::ValidationError("--kind must be er or planted-vc");
  }();
  out << "# " << kind << " n=" << g.num_vertices() << " m=" << g.num_edges()
      << " seed=" << seed << "\n";
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void cmd_exact(const std::string& problem, const std::string& input) {
  if (problem == "sc") {
    auto ss = load_ss_file(input);
    auto r = exact_set_cover(ss);
    if (!r.known) throw std::runtime_error("budget exceeded: optimum unknown");
    std::cout << "sc," << r.value << ',';
    for (size_t i = 0; i < r.witness.size(); ++i)
      std::cout << (i ? " " : "") << r.witness[i];
    std::cout << '\n';
    return;
  }
  Graph g = load_graph_file(input, problem == "maxcut" || problem == "wvc");
  if (problem == "maxcut") {
    auto r = exact_maxcut(g);
    if (!r.known) throw std::runtime_error("budget exceeded: optimum unknown");
    std::cout << "maxcut," << r.value << ',';
    for (int v = 0; v < g.num_vertices(); ++v)
      std::cout << (v ? " " : "") << int(r.witness[v]);
    std::cout << '\n';
    return;
  }
  VertexSetResult r;
  if (problem == "vc") r = exact_vc(g);
  else if (problem == "wvc") r = exact_weighted_vc(g);
  else if (problem == "mis") r = exact_mis(g);
  else throw CLI::ValidationError("unknown problem " + problem);
  if (!r.known) throw std::runtime_error("budget exceeded: optimum unknown");
  std::cout << problem << ',' << r.value << ',';
  for (size_t i = 0; i < r.witness.size(); ++i)
    std::cout << (i ? " " : "") << r.witness[i];
  std::cout << '\n';
}

void cmd_solve(const std::string& problem, const std::string& algo,
               const std::string& input, double eps, std::optional<int> delta,
               std::uint64_t pred_seed, double eta, int iters) {
  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();
  auto ms_since = [&] {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };
  if (problem == "sc") {
    auto ss = load_ss_file(input);
    if (algo == "greedy-sc") {
      std::vector<int> universe(ss.m), all(ss.num_sets());
      std::iota(universe.begin(), universe.end(), 0);
      std::iota(all.begin(), all.end(), 0);
      auto chosen = greedy_set_cover(ss, universe, all);
      std::cout << chosen.size() << ",greedy," << ms_since() << '\n';
      return;
    }
    auto opt = exact_set_cover(ss);
    if (!opt.known) throw std::runtime_error("cannot build predictions: optimum unknown");
    GroundTruth truth{ProblemTag::SetCover, opt.witness, {}};
    auto preds = gen_sc_predictions(ss, truth, eps, pred_seed);
    auto sol = learned_set_cover(ss, preds, eps, delta);
    std::cout << sol.size() << ",parts(" << sol.j_l.size() << ','
              << sol.j_a.size() << ',' << sol.j_f.size() << ")," << ms_since()
              << '\n';
    return;
  }
  Graph g = load_graph_file(input, problem == "maxcut" || problem == "wvc");
  if (problem == "vc" || problem == "wvc") {
    if (algo == "vc2" || algo == "wvc2") {
      auto cover = algo == "vc2" ? vc_2approx_matching(g) : weighted_vc_2approx(g);
      double w = 0;
      for (VertexId v : cover) w += g.vertex_weight(v);
      std::cout << w << ",baseline," << ms_since() << '\n';
      return;
    }
    auto opt = problem == "wvc" ? exact_weighted_vc(g) : exact_vc(g);
    if (!opt.known) throw std::runtime_error("cannot build predictions: optimum unknown");
    GroundTruth truth{ProblemTag::VertexCover, opt.witness, {}};
    auto preds = gen_vc_predictions(g, truth, eps, pred_seed);
    VcParams p{eps, delta};
    auto sol = problem == "wvc" ? learned_weighted_vc(g, preds, p)
                                : learned_vc(g, preds, p);
    std::cout << sol.weight << ",parts(" << sol.s0.size() << ',' << sol.s1.size()
              << ',' << sol.s2.size() << ")," << ms_since() << '\n';
    return;
  }
  if (problem == "mis") {
    if (algo == "greedy-mis") {
      std::cout << greedy_mis_min_degree(g).size() << ",greedy," << ms_since()
                << '\n';
      return;
    }
    auto opt = exact_mis(g);
    if (!opt.known) throw std::runtime_error("cannot build predictions: optimum unknown");
    GroundTruth truth{ProblemTag::Mis, opt.witness, {}};
    auto preds = gen_mis_predictions(g, truth, eps, pred_seed);
    if (algo == "pred-only-mis") {
      std::cout << mis_predictions_only(g, preds).size() << ",pred-only,"
                << ms_since() << '\n';
      return;
    }
    MisParams p{eps, delta, /*allow_large_epsilon=*/true};
    auto sol = learned_mis(g, preds, p);
    std::cout << sol.size() << ',' << sol.c1.size() << ',' << sol.c2.size()
              << ',' << (sol.chose_c2 ? "C2" : "C1") << ',' << ms_since() << '\n';
    return;
  }
  if (problem == "maxcut") {
    if (algo == "ls-maxcut") {
      std::cout << maxcut_local_search(g).value << ",local-search," << ms_since()
                << '\n';
      return;
    }
    auto opt = exact_maxcut(g);
    if (!opt.known) throw std::runtime_error("cannot build predictions: optimum unknown");
    GroundTruth truth{ProblemTag::MaxCut, {}, opt.witness};
    auto preds = gen_maxcut_predictions(g, truth, eps, pred_seed);
    MaxcutParams p;
    p.epsilon = eps;
    p.eta = eta;
    p.delta_override = delta;
    p.iters = iters;
    auto sol = learned_maxcut(g, preds, p);
    std::cout << sol.value << ',' << opt.value << ','
              << (sol.graph_wide ? "wide" : "narrow") << ",candidates("
              << sol.learned_value << ',' << sol.local_search_value << "),"
              << ms_since() << '\n';
    return;
  }
  throw CLI::ValidationError("unknown problem " + problem);
}

void cmd_predict(const std::string& problem, const std::string& input,
                 double eps, std::uint64_t seed, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  if (problem == "sc") {
    auto ss = load_ss_file(input);
    auto opt = exact_set_cover(ss);
    if (!opt.known) throw std::runtime_error("optimum unknown");
    gen_sc_predictions(ss, {ProblemTag::SetCover, opt.witness, {}}, eps, seed)
        .dump_csv(out);
    return;
  }
  Graph g = load_graph_file(input, problem == "maxcut");
  PredictionTable preds;
  if (problem == "vc") {
    auto opt = exact_vc(g);
    if (!opt.known) throw std::runtime_error("optimum unknown");
    preds = gen_vc_predictions(g, {ProblemTag::VertexCover, opt.witness, {}},
                               eps, seed);
  } else if (problem == "mis") {
    auto opt = exact_mis(g);
    if (!opt.known) throw std::runtime_error("optimum unknown");
    preds = gen_mis_predictions(g, {ProblemTag::Mis, opt.witness, {}}, eps, seed);
  } else if (problem == "maxcut") {
    auto opt = exact_maxcut(g);
    if (!opt.known) throw std::runtime_error("optimum unknown");
    preds = gen_maxcut_predictions(g, {ProblemTag::MaxCut, {}, opt.witness},
                                   eps, seed);
  } else {
    throw CLI::ValidationError("unknown problem " + problem);
  }
  preds.dump_csv(out);
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Learning-augmented graph approximation toolkit"};
  app.require_subcommand(1);

  // gen-graph
  auto* gen = app.add_subcommand("gen-graph", "Generate a synthetic graph");
  std::string gen_kind = "er", gen_out;
  int gen_n = 10, gen_cover = 5, gen_free = 20;
  double gen_p = 0.2;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind, "er | planted-vc");
  gen->add_option("--n", gen_n);
  gen->add_option("--p", gen_p);
  gen->add_option("--cover", gen_cover);
  gen->add_option("--free", gen_free);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--output", gen_out);

  // gen-setsystem
  auto* gss = app.add_subcommand("gen-setsystem", "Emit a set-system file");
  int gss_m = 24, gss_k = 3, gss_decoys = 6;
  std::uint64_t gss_seed = 1;
  std::string gss_out;
  gss->add_option("--m", gss_m);
  gss->add_option("--k", gss_k);
  gss->add_option("--decoys", gss_decoys);
  gss->add_option("--seed", gss_seed);
  gss->add_option("--output", gss_out);

  // exact
  auto* exact = app.add_subcommand("exact", "Exact optimum for a small instance");
  std::string exact_problem, exact_input;
  exact->add_option("--problem", exact_problem)->required();
  exact->add_option("--input", exact_input)->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Run one algorithm on one instance");
  std::string solve_problem, solve_input, solve_algo = "learned";
  double solve_eps = 0.2, solve_eta = 0.1;
  int solve_iters = 2000;
  std::int64_t solve_delta = -1;
  std::uint64_t solve_seed = 1;
  solve->add_option("--problem", solve_problem)->required();
  solve->add_option("--input", solve_input)->required();
  solve->add_option("--algo", solve_algo,
                    "learned | vc2 | wvc2 | greedy-sc | greedy-mis | "
                    "ls-maxcut | pred-only-mis");
  solve->add_option("--epsilon", solve_eps);
  solve->add_option("--delta", solve_delta);
  solve->add_option("--eta", solve_eta);
  solve->add_option("--iters", solve_iters);
  solve->add_option("--pred-seed", solve_seed);

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a configured sweep");
  std::string exp_config;
  exp->add_option("--config", exp_config)->required();

  // predict
  auto* pred = app.add_subcommand("predict", "Dump a prediction table as CSV");
  std::string pred_problem, pred_input, pred_out;
  double pred_eps = 0.2;
  std::uint64_t pred_seed = 1;
  pred->add_option("--problem", pred_problem)->required();
  pred->add_option("--input", pred_input)->required();
  pred->add_option("--epsilon", pred_eps);
  pred->add_option("--seed", pred_seed);
  pred->add_option("--output", pred_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // Successful --help exits 0; everything else is a usage error.
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      cmd_gen_graph(gen_kind, gen_n, gen_p, gen_cover, gen_free, gen_seed,
                    gen_out);
    } else if (*gss) {
      // Reuse the harness generator through a round-trip file format.
      ExperimentConfig cfg;
      std::ofstream file;
      std::ostream& out = open_output(file, gss_out);
      std::ostringstream spec;
      spec << "planted-sc:m=" << gss_m << ",k=" << gss_k
           << ",decoys=" << gss_decoys << ",seed=" << gss_seed;
      cfg.instance = spec.str();
      cfg.problem = "sc";
      // Build and print directly.
      // (build_instance is internal to the harness; emit via a tiny local gen.)
      (void)cfg;
      if (gss_m % gss_k != 0)
        throw std::runtime_error("k must divide m");
      int block = gss_m / gss_k;
      std::vector<std::vector<int>> sets;
      for (int j = 0; j < gss_k; ++j) {
        std::vector<int> s(block);
        std::iota(s.begin(), s.end(), j * block);
        sets.push_back(std::move(s));
      }
      SplitMix rng(splitmix64(gss_seed ^ 0x73635f696e7374ULL));
      for (int d = 0; d < gss_decoys; ++d) {
        int size = std::max(2, block / 2 +
                                   static_cast<int>(rng.next_below(block / 2 + 3)));
        std::set<int> s;
        while (static_cast<int>(s.size()) < size)
          s.insert(static_cast<int>(rng.next_below(gss_m)));
        sets.emplace_back(s.begin(), s.end());
      }
      out << gss_m << ' ' << sets.size() << '\n';
      for (const auto& s : sets) {
        for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
        out << '\n';
      }
    } else if (*exact) {
      cmd_exact(exact_problem, exact_input);
    } else if (*solve) {
      std::optional<int> delta;
      if (solve_delta >= 0) delta = static_cast<int>(solve_delta);
      cmd_solve(solve_problem, solve_algo, solve_input, solve_eps, delta,
                solve_seed, solve_eta, solve_iters);
    } else if (*exp) {
      auto cfg = ExperimentConfig::from_file(exp_config);
      auto result = run_experiment(cfg);
      std::ofstream file;
      std::ostream& out = open_output(file, cfg.output_path);
      write_records_csv(out, result.records, cfg.runtime_in_csv);
      write_summary_csv(std::cout, result.summaries);
    } else if (*pred) {
      cmd_predict(pred_problem, pred_input, pred_eps, pred_seed, pred_out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace predgraph
