#pragma once

// Experiment orchestration: config parsing with named presets, the
// environments -> meta-learner -> learner wiring, per-task records,
// baselines, entropy metrics, and CSV/JSON output.

#include <cstdint>
#include <string>
#include <vector>

#include "metabandit/bandit_learners.hpp"
#include "metabandit/environments.hpp"
#include "metabandit/meta_learner.hpp"

namespace metabandit {

struct ExperimentConfig {
  Mode mode = Mode::MabImplicit;
  // horizon and grid
  std::size_t d = 4, m = 200, T = 20, k = 8;
  double rho = 0.2;
  double theta_lo = 0.5, theta_hi = 1.0;
  double eps = 0.1;
  double gamma = 0.05;
  // environment
  std::string generator = "sparse_mab";  // sparse_mab|outlier_mab|sphere_blo|shortest_path
  std::size_t s = 1;
  double delta = 0.3, noise = 0.1, p = 0.0, kappa_dir = 4.0;
  std::string graph_file;
  bool shared_optimum = true;
  // execution
  std::uint64_t seed = 1;
  std::size_t replicas = 2;
  bool parallel_replicas = false;
  std::string out_dir = ".";
};

// Named presets: "smoke" (tiny deterministic run used by the golden-record
// test) and "cor-mab-halfbeta" (the half-beta grid recipe: gamma =
// 1/sqrt(d m T), eps = d^{5/7}/(m T)^{2/7}, rho = T^{-1/4},
// k = ceil(d^{1/4} sqrt(T)), beta in [1/2, 1]).
ExperimentConfig preset_config(const std::string& name);

// Flat key = value text with optional [section] headers (sections only
// group lines; keys are global).  Unknown keys raise std::runtime_error.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_text(const ExperimentConfig& cfg);

struct ExperimentRecord {
  std::size_t replica = 0, task = 0;
  double theta = 0.0, eta = 0.0;
  double regret = 0.0, est_regret = 0.0, upper_bound = 0.0;
  int identified = 0;
  double cum_avg_regret = 0.0;
  double h_half = 0.0, h_one = 0.0;  // running entropies of estimated optima (MAB)
  double v_theta = 0.0;              // running similarity at the sampled theta
};

struct ExperimentResult {
  std::vector<ExperimentRecord> records;
  std::string summary_json;
};

// Run the meta-algorithm over the configured stream, one MetaState per
// replica.  Replicas share the generated stream and use forked rng roots, so
// serial and concurrent execution produce identical records.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Independent per-task baselines with center initialization and minimax
// step-size; name is independent_tsallis_half, independent_exp3, or
// independent_blo.
ExperimentResult run_baseline(const std::string& name, const ExperimentConfig& cfg);

struct EntropyTables {
  std::vector<double> betas;
  Vec h_estimated, h_true;
  double v_theta = 0.0;
};

// Entropies of the estimated/true optimum histograms plus the similarity
// statistic at `theta` (MAB modes).
EntropyTables compute_entropy_metrics(const std::vector<Vec>& estimated,
                                      const std::vector<Vec>& true_opts,
                                      const std::vector<double>& betas, double theta,
                                      double eps);

// Fixed, versioned CSV schema; floats carry 17 significant digits.
std::string records_to_csv(const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> records_from_csv(const std::string& csv);
void write_file(const std::string& path, const std::string& content);

}  // namespace metabandit
