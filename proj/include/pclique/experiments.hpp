#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pclique/algorithms.hpp"
#include "pclique/theory.hpp"

namespace pclique {

struct ExperimentConfig {
  double n = 1e4;
  int d = 2;
  std::vector<double> mu_list;
  std::vector<std::size_t> k_list;
  std::size_t trials = 200;
  std::uint64_t master_seed = 1;
  std::vector<Method> methods{Method::kVd, Method::kCn};
  std::optional<std::size_t> fixed_n;
  // Worker threads; 0 means std::thread::hardware_concurrency().
  std::size_t threads = 0;

  // Throws UsageError (empty grid, k < 2, trials < 1, no methods) or
  // ModelDomainError (some mu implies r >= 1/4).
  void validate() const;
};

// Flat "key = value" text; '#' starts a comment. Keys: n, d, mu, k, trials,
// seed, methods, fixed_n, threads. Lists are comma-separated. Throws
// ParseError with the offending line.
ExperimentConfig parse_experiment_config(std::istream& in);

// Seed of one trial: mix_seed(mix_seed(mix_seed(master, mu_index), k_index), trial_index).
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::size_t mu_index,
                                std::size_t k_index, std::size_t trial_index);

struct TrialRecord {
  double n = 0.0;
  int d = 0;
  double mu = 0.0;
  double r = 0.0;
  std::size_t k = 0;
  std::size_t mu_index = 0;
  std::size_t k_index = 0;
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  std::size_t vertex_count = 0;
  bool skipped = false;  // k > N
  std::optional<bool> vd_match;
  std::optional<bool> cn_match;
  double wall_seconds = 0.0;
};

// One planted instance, every configured method, scored against K.
TrialRecord run_trial(const ExperimentConfig& config, std::size_t mu_index, std::size_t k_index,
                      std::size_t trial_index);

struct CellSummary {
  double n = 0.0;
  int d = 0;
  double mu = 0.0;
  double r = 0.0;
  std::size_t k = 0;
  Method method = Method::kVd;
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;  // successes / (trials - skipped); NaN if all skipped
  double mean_vertex_count = 0.0;
};

struct GridResult {
  std::vector<CellSummary> cells;  // mu-major, then k, then method order
  std::vector<TrialRecord> trials;
};

GridResult run_grid(const ExperimentConfig& config);

// Columns: n,d,mu,r,k,trials,skipped,method,success_rate,mean_N,master_seed
void write_grid_csv(std::ostream& out, const ExperimentConfig& config, const GridResult& result);
std::string grid_csv(const ExperimentConfig& config, const GridResult& result);

const CellSummary* find_cell(const GridResult& result, double mu, std::size_t k, Method method);

struct PhaseCell {
  double n = 0.0;
  int d = 0;
  double mu = 0.0;
  long long k = 0;
  bool ill_posed = false;
  RegimeVerdict verdict;
};

// `count` points geometrically spaced over [lo, hi].
std::vector<double> log_space(double lo, double hi, std::size_t count);
// Log-spaced integers >= 2, rounded and deduplicated.
std::vector<long long> log_space_integers(double lo, double hi, std::size_t count);

// classify_regime on every (mu, k) cell. Cells whose parameters are outside
// the model (r >= 1/4 or ill-posed) are kept and flagged.
std::vector<PhaseCell> phase_diagram(double n, int d, const std::vector<double>& mu_grid,
                                     const std::vector<long long>& k_grid, double epsilon,
                                     const ClassifierConfig& config = {});

// Columns: n,d,mu,k,alpha,T,t,vd_verdict,cn_verdict
void write_phase_csv(std::ostream& out, const std::vector<PhaseCell>& cells);

}  // namespace pclique
