#include "pclique/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "pclique/errors.hpp"
#include "pclique/random.hpp"
#include "pclique/rgg.hpp"

namespace pclique {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = trim(item);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

template <class T>
T parse_number(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (!in || !(in >> std::ws).eof()) throw ParseError(line, "malformed number '" + text + "'");
  return value;
}

Method parse_method(const std::string& text, std::size_t line) {
  std::string upper;
  for (char c : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "VD") return Method::kVd;
  if (upper == "CN") return Method::kCn;
  throw ParseError(line, "unknown method '" + text + "'");
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{}", v);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (mu_list.empty() || k_list.empty()) throw UsageError("experiment grid is empty");
  if (trials < 1) throw UsageError("trials must be >= 1");
  if (methods.empty()) throw UsageError("no recovery method selected");
  if (!(n > 0.0)) throw UsageError("n must be positive");
  if (d < 1) throw UsageError("d must be >= 1");
  for (std::size_t k : k_list) {
    if (k < 2) throw UsageError("every k must be >= 2");
  }
  for (double mu : mu_list) {
    if (!(mu > 0.0)) throw UsageError("every mu must be positive");
    (void)radius_from_mu(n, d, mu);
  }
}

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig config;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "n") {
      config.n = parse_number<double>(value, line);
    } else if (key == "d") {
      config.d = parse_number<int>(value, line);
    } else if (key == "mu") {
      config.mu_list.clear();
      for (const auto& item : split_list(value)) config.mu_list.push_back(parse_number<double>(item, line));
    } else if (key == "k") {
      config.k_list.clear();
      for (const auto& item : split_list(value)) config.k_list.push_back(parse_number<std::size_t>(item, line));
    } else if (key == "trials") {
      config.trials = parse_number<std::size_t>(value, line);
    } else if (key == "seed") {
      config.master_seed = parse_number<std::uint64_t>(value, line);
    } else if (key == "methods") {
      config.methods.clear();
      for (const auto& item : split_list(value)) config.methods.push_back(parse_method(item, line));
    } else if (key == "fixed_n") {
      config.fixed_n = parse_number<std::size_t>(value, line);
    } else if (key == "threads") {
      config.threads = parse_number<std::size_t>(value, line);
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  return config;
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::size_t mu_index,
                                std::size_t k_index, std::size_t trial_index) {
  return mix_seed(mix_seed(mix_seed(master_seed, mu_index), k_index), trial_index);
}

TrialRecord run_trial(const ExperimentConfig& config, std::size_t mu_index, std::size_t k_index,
                      std::size_t trial_index) {
  const auto start = std::chrono::steady_clock::now();
  const double mu = config.mu_list.at(mu_index);
  const std::size_t k = config.k_list.at(k_index);
  const auto params = ModelParams::from_mu(config.n, config.d, mu);

  TrialRecord rec;
  rec.n = config.n;
  rec.d = config.d;
  rec.mu = mu;
  rec.r = params.radius();
  rec.k = k;
  rec.mu_index = mu_index;
  rec.k_index = k_index;
  rec.trial_index = trial_index;
  rec.seed = derive_trial_seed(config.master_seed, mu_index, k_index, trial_index);

  const Graph base = sample_instance(params, rec.seed, SampleOptions{config.fixed_n});
  rec.vertex_count = base.vertex_count();
  if (k > rec.vertex_count) {
    rec.skipped = true;
  } else {
    const PlantedInstance inst = plant_clique(base, k, rec.seed);
    for (Method m : config.methods) {
      const RecoveryResult raw = m == Method::kVd ? vd_recover(inst.graph, k) : cn_recover(inst.graph, k);
      const bool match = evaluate(raw, inst.clique).exact_match;
      (m == Method::kVd ? rec.vd_match : rec.cn_match) = match;
    }
  }
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

GridResult run_grid(const ExperimentConfig& config) {
  config.validate();
  const std::size_t per_cell = config.trials;
  const std::size_t cells = config.mu_list.size() * config.k_list.size();
  const std::size_t total = cells * per_cell;

  GridResult result;
  result.trials.resize(total);

  std::size_t workers = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  workers = std::clamp<std::size_t>(workers, 1, total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      const std::size_t cell = task / per_cell;
      try {
        result.trials[task] = run_trial(config, cell / config.k_list.size(),
                                        cell % config.k_list.size(), task % per_cell);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t cell = 0; cell < cells; ++cell) {
    const auto first = result.trials.begin() + static_cast<std::ptrdiff_t>(cell * per_cell);
    const auto last = first + static_cast<std::ptrdiff_t>(per_cell);
    for (Method m : config.methods) {
      CellSummary s;
      s.n = config.n;
      s.d = config.d;
      s.mu = first->mu;
      s.r = first->r;
      s.k = first->k;
      s.method = m;
      s.trials = per_cell;
      double vertex_sum = 0.0;
      for (auto it = first; it != last; ++it) {
        vertex_sum += static_cast<double>(it->vertex_count);
        if (it->skipped) {
          ++s.skipped;
          continue;
        }
        const auto& match = m == Method::kVd ? it->vd_match : it->cn_match;
        if (match.value_or(false)) ++s.successes;
      }
      const std::size_t scored = s.trials - s.skipped;
      s.success_rate = scored == 0 ? std::numeric_limits<double>::quiet_NaN()
                                   : static_cast<double>(s.successes) / static_cast<double>(scored);
      s.mean_vertex_count = vertex_sum / static_cast<double>(per_cell);
      result.cells.push_back(s);
    }
  }
  return result;
}

void write_grid_csv(std::ostream& out, const ExperimentConfig& config, const GridResult& result) {
  out << "n,d,mu,r,k,trials,skipped,method,success_rate,mean_N,master_seed\n";
  for (const auto& c : result.cells) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", num(c.n), c.d, num(c.mu), num(c.r),
                       c.k, c.trials, c.skipped, to_string(c.method), num(c.success_rate),
                       num(c.mean_vertex_count), config.master_seed);
  }
}

std::string grid_csv(const ExperimentConfig& config, const GridResult& result) {
  std::ostringstream out;
  write_grid_csv(out, config, result);
  return out.str();
}

const CellSummary* find_cell(const GridResult& result, double mu, std::size_t k, Method method) {
  for (const auto& c : result.cells) {
    if (c.mu == mu && c.k == k && c.method == method) return &c;
  }
  return nullptr;
}

std::vector<double> log_space(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi >= lo) || count == 0) throw UsageError("log_space needs 0 < lo <= hi, count >= 1");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double step = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo * std::exp(step * static_cast<double>(i));
  out.back() = hi;
  return out;
}

std::vector<long long> log_space_integers(double lo, double hi, std::size_t count) {
  std::vector<long long> out;
  for (double v : log_space(std::max(lo, 2.0), std::max(hi, 2.0), count)) {
    const auto k = static_cast<long long>(std::llround(v));
    if (out.empty() || out.back() != k) out.push_back(k);
  }
  return out;
}

std::vector<PhaseCell> phase_diagram(double n, int d, const std::vector<double>& mu_grid,
                                     const std::vector<long long>& k_grid, double epsilon,
                                     const ClassifierConfig& config) {
  if (mu_grid.empty() || k_grid.empty()) throw UsageError("phase diagram grid is empty");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw UsageError("epsilon must lie in (0,1)");
  std::vector<PhaseCell> out;
  out.reserve(mu_grid.size() * k_grid.size());
  for (double mu : mu_grid) {
    if (!(mu > 0.0)) throw UsageError("phase diagram mu values must be positive");
    for (long long k : k_grid) {
      if (k < 2) throw UsageError("phase diagram k values must be >= 2");
      PhaseCell cell;
      cell.n = n;
      cell.d = d;
      cell.mu = mu;
      cell.k = k;
      try {
        cell.verdict = classify_regime(ModelParams::from_mu(n, d, mu), k, epsilon, config);
      } catch (const ModelDomainError& e) {
        cell.ill_posed = true;
        cell.verdict.alpha = n > 1.0 ? mu / std::log(n) : std::numeric_limits<double>::quiet_NaN();
        cell.verdict.T_n = cell.verdict.t_n = std::numeric_limits<double>::quiet_NaN();
        cell.verdict.notes = e.what();
      }
      out.push_back(std::move(cell));
    }
  }
  return out;
}

void write_phase_csv(std::ostream& out, const std::vector<PhaseCell>& cells) {
  out << "n,d,mu,k,alpha,T,t,vd_verdict,cn_verdict\n";
  for (const auto& c : cells) {
    const std::string_view vd = c.ill_posed ? "ILL_POSED" : to_string(c.verdict.vd);
    const std::string_view cn = c.ill_posed ? "ILL_POSED" : to_string(c.verdict.cn);
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", num(c.n), c.d, num(c.mu), c.k,
                       num(c.verdict.alpha), num(c.verdict.T_n), num(c.verdict.t_n), vd, cn);
  }
}

}  // namespace pclique
