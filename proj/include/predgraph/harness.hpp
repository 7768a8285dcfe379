#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "predgraph/graph.hpp"
#include "predgraph/predictions.hpp"

namespace predgraph {

struct ExperimentConfig {
  std::string problem;            // vc | wvc | sc | mis | maxcut
  std::string dataset = "synthetic";
  std::string instance;           // "file:PATH", "er:...", "planted-vc:...", "scfile:PATH"
  std::vector<std::string> algorithms;
  std::vector<double> epsilons;
  std::optional<int> delta_override;
  int trials = 10;
  std::uint64_t base_seed = 1;
  std::string output_path;
  bool runtime_in_csv = true;     // disable for byte-identical reruns

  static ExperimentConfig from_file(const std::string& path);
  static ExperimentConfig from_stream(std::istream& in);
};

struct TrialRecord {
  std::string problem;
  std::string dataset;
  std::string algorithm;
  double epsilon = 0;
  int delta = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double value = 0;
  std::optional<double> opt;
  std::optional<double> ratio;
  double runtime_ms = 0;
  std::string error;  // non-empty if the trial failed
};

struct CellSummary {
  std::string problem;
  std::string algorithm;
  double epsilon = 0;
  int count = 0;
  double mean = 0;
  double stddev = 0;
  double ci_low = 0;   // 95% bootstrap CI over the mean ratio
  double ci_high = 0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  std::vector<CellSummary> summaries;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                       bool runtime_in_csv);
void write_summary_csv(std::ostream& out,
                       const std::vector<CellSummary>& summaries);

std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records);

// Percentile bootstrap CI for the mean; deterministic given the seed.
std::pair<double, double> bootstrap_mean_ci(const std::vector<double>& samples,
                                            double level = 0.95,
                                            int resamples = 1000,
                                            std::uint64_t seed = 12345);

// CLI entry point: subcommands gen-graph, gen-setsystem, exact, solve,
// experiment, predict. Returns 0 on success, 1 on usage error, 2 on
// runtime error.
int cli_main(int argc, char** argv);

}  // namespace predgraph
