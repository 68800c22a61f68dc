#include "pclique/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pclique/algorithms.hpp"
#include "pclique/errors.hpp"
#include "pclique/experiments.hpp"
#include "pclique/geometry.hpp"
#include "pclique/graph_io.hpp"
#include "pclique/rgg.hpp"
#include "pclique/theory.hpp"

namespace pclique {
namespace {

// "-" means the command's standard output.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  body(file);
}

std::string set_string(const std::vector<Vertex>& s) {
  std::string text = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) text += ',';
    text += std::to_string(s[i]);
  }
  return text + "}";
}

// --mu / --radius pair shared by generate and constants.
struct ModelFlags {
  double n = 0.0;
  int d = 2;
  double mu = 0.0;
  double radius = 0.0;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* radius_opt = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "expected number of vertices")->required();
    app->add_option("--d", d, "dimension of the torus")->capture_default_str();
    mu_opt = app->add_option("--mu", mu, "mean degree");
    radius_opt = app->add_option("--radius", radius, "connection radius");
    mu_opt->excludes(radius_opt);
    radius_opt->excludes(mu_opt);
  }

  ModelParams params() const {
    if (d < 1) throw UsageError("--d must be >= 1");
    if (!(n > 0.0)) throw UsageError("--n must be positive");
    if (mu_opt->count() > 0) return ModelParams::from_mu(n, d, mu);
    if (radius_opt->count() > 0) return ModelParams::from_radius(n, d, radius);
    throw UsageError("one of --mu or --radius is required");
  }
};

void print_recovery(std::ostream& out, const LoadedInstance& inst, RecoveryResult result,
                    std::size_t k) {
  if (inst.clique) result = evaluate(std::move(result), *inst.clique);
  out << "method=" << to_string(result.method) << '\n';
  out << "k=" << k << '\n';
  out << "recovered=" << set_string(result.output) << '\n';
  if (inst.clique) {
    out << "exact_match=" << (result.exact_match ? "true" : "false") << '\n';
    out << "overlap=" << result.overlap << '\n';
  }
  out << fmt::format("work=vertices:{} edges:{} clique_checks:{} probes:{}\n",
                     result.work.vertices_scanned, result.work.edges_scanned,
                     result.work.clique_checks, result.work.adjacency_probes);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planted cliques in hard random geometric graphs", "pclique"};
  app.require_subcommand(1);
  std::function<void()> action;

  // generate
  ModelFlags gen_model;
  std::uint64_t gen_seed = 1;
  std::size_t gen_fixed = 0;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("generate", "sample a hard random geometric graph");
  gen_model.attach(gen);
  gen->add_option("--seed", gen_seed)->capture_default_str();
  auto* gen_fixed_opt = gen->add_option("--fixed-n", gen_fixed, "use exactly this many vertices");
  gen->add_option("--out", gen_out, "output graph file")->capture_default_str();
  gen->callback([&] {
    action = [&] {
      SampleOptions options;
      if (gen_fixed_opt->count() > 0) options.fixed_vertex_count = gen_fixed;
      const Graph g = sample_instance(gen_model.params(), gen_seed, options);
      emit(gen_out, out, [&](std::ostream& o) { write_graph(o, g); });
    };
  });

  // plant
  std::string plant_in;
  std::string plant_out = "-";
  std::size_t plant_k = 0;
  std::uint64_t plant_seed = 1;
  auto* plant = app.add_subcommand("plant", "plant a clique in a graph file");
  plant->add_option("--in", plant_in, "input graph file")->required();
  plant->add_option("--k", plant_k, "clique size")->required();
  plant->add_option("--seed", plant_seed)->capture_default_str();
  plant->add_option("--out", plant_out, "output instance file")->capture_default_str();
  plant->callback([&] {
    action = [&] {
      const auto loaded = load_instance(plant_in);
      const auto inst = plant_clique(loaded.graph, plant_k, plant_seed);
      emit(plant_out, out, [&](std::ostream& o) { write_instance(o, inst); });
    };
  });

  // run-vd / run-cn
  std::string run_in;
  std::size_t run_k = 0;
  CLI::Option* run_k_opt[2] = {nullptr, nullptr};
  const Method run_methods[2] = {Method::kVd, Method::kCn};
  const char* run_names[2] = {"run-vd", "run-cn"};
  for (int m = 0; m < 2; ++m) {
    auto* sub = app.add_subcommand(run_names[m], m == 0 ? "vertex-degree recovery"
                                                        : "common-neighbours recovery");
    sub->add_option("--in", run_in, "graph or instance file")->required();
    run_k_opt[m] = sub->add_option("--k", run_k, "clique size (defaults to the planted size)");
    sub->callback([&, m] {
      action = [&, m] {
        const auto loaded = load_instance(run_in);
        std::size_t k = run_k;
        if (run_k_opt[m]->count() == 0) {
          if (!loaded.clique) throw UsageError("--k is required for files without a clique section");
          k = loaded.clique->size();
        }
        auto result = run_methods[m] == Method::kVd ? vd_recover(loaded.graph, k)
                                                    : cn_recover(loaded.graph, k);
        print_recovery(out, loaded, std::move(result), k);
      };
    });
  }

  // experiment
  std::string exp_config_path;
  ExperimentConfig exp_flags;
  std::vector<std::string> exp_methods;
  std::size_t exp_fixed = 0;
  std::string exp_out = "-";
  auto* exp = app.add_subcommand("experiment", "Monte Carlo success rates over a (mu, k) grid");
  exp->add_option("--config", exp_config_path, "key = value config file");
  auto* exp_n = exp->add_option("--n", exp_flags.n);
  auto* exp_d = exp->add_option("--d", exp_flags.d);
  auto* exp_mu = exp->add_option("--mu", exp_flags.mu_list, "mean degrees")->delimiter(',');
  auto* exp_k = exp->add_option("--k", exp_flags.k_list, "clique sizes")->delimiter(',');
  auto* exp_trials = exp->add_option("--trials", exp_flags.trials, "trials per cell (default 200)");
  auto* exp_seed = exp->add_option("--seed", exp_flags.master_seed, "master seed");
  auto* exp_methods_opt = exp->add_option("--methods", exp_methods, "VD,CN")->delimiter(',');
  auto* exp_fixed_opt = exp->add_option("--fixed-n", exp_fixed);
  auto* exp_threads = exp->add_option("--threads", exp_flags.threads, "worker threads (0 = all cores)");
  exp->add_option("--out", exp_out, "CSV output")->capture_default_str();
  exp->callback([&] {
    action = [&] {
      ExperimentConfig config;
      if (!exp_config_path.empty()) {
        std::ifstream in(exp_config_path);
        if (!in) throw UsageError("cannot open " + exp_config_path);
        config = parse_experiment_config(in);
      }
      if (exp_n->count()) config.n = exp_flags.n;
      if (exp_d->count()) config.d = exp_flags.d;
      if (exp_mu->count()) config.mu_list = exp_flags.mu_list;
      if (exp_k->count()) config.k_list = exp_flags.k_list;
      if (exp_trials->count()) config.trials = exp_flags.trials;
      if (exp_seed->count()) config.master_seed = exp_flags.master_seed;
      if (exp_fixed_opt->count()) config.fixed_n = exp_fixed;
      if (exp_threads->count()) config.threads = exp_flags.threads;
      if (exp_methods_opt->count()) {
        config.methods.clear();
        for (const auto& name : exp_methods) {
          if (name == "VD" || name == "vd") {
            config.methods.push_back(Method::kVd);
          } else if (name == "CN" || name == "cn") {
            config.methods.push_back(Method::kCn);
          } else {
            throw UsageError("unknown method '" + name + "'");
          }
        }
      }
      const auto result = run_grid(config);
      emit(exp_out, out, [&](std::ostream& o) { write_grid_csv(o, config, result); });
    };
  });

  // phase-diagram
  double ph_n = 1e9;
  int ph_d = 2;
  double ph_mu_min = 1e-2, ph_mu_max = 1e6, ph_k_min = 2, ph_k_max = 1e6;
  std::size_t ph_mu_steps = 20, ph_k_steps = 20;
  double ph_eps = 0.1;
  ClassifierConfig ph_cfg;
  double ph_c1 = 0.0, ph_c2 = 0.0;
  std::string ph_out = "-";
  auto* ph = app.add_subcommand("phase-diagram", "regime verdicts over a log-spaced (mu, k) grid");
  ph->add_option("--n", ph_n)->capture_default_str();
  ph->add_option("--d", ph_d)->capture_default_str();
  ph->add_option("--mu-min", ph_mu_min)->capture_default_str();
  ph->add_option("--mu-max", ph_mu_max)->capture_default_str();
  ph->add_option("--mu-steps", ph_mu_steps)->capture_default_str();
  ph->add_option("--k-min", ph_k_min)->capture_default_str();
  ph->add_option("--k-max", ph_k_max)->capture_default_str();
  ph->add_option("--k-steps", ph_k_steps)->capture_default_str();
  ph->add_option("--epsilon", ph_eps)->capture_default_str();
  ph->add_option("--tau", ph_cfg.tau, "threshold for o(1) conditions")->capture_default_str();
  auto* ph_c1_opt = ph->add_option("--c1", ph_c1, "override the blocking-region constant");
  auto* ph_c2_opt = ph->add_option("--c2", ph_c2, "override the lens constant");
  ph->add_option("--out", ph_out, "CSV output")->capture_default_str();
  ph->callback([&] {
    action = [&] {
      if (ph_d < 1) throw UsageError("--d must be >= 1");
      if (ph_c1_opt->count()) ph_cfg.c1 = ph_c1;
      if (ph_c2_opt->count()) ph_cfg.c2 = ph_c2;
      const auto cells = phase_diagram(ph_n, ph_d, log_space(ph_mu_min, ph_mu_max, ph_mu_steps),
                                       log_space_integers(ph_k_min, ph_k_max, ph_k_steps), ph_eps,
                                       ph_cfg);
      emit(ph_out, out, [&](std::ostream& o) { write_phase_csv(o, cells); });
    };
  });

  // constants
  ModelFlags cst_model;
  double cst_eps = 0.1;
  long long cst_k = 0;
  auto* cst = app.add_subcommand("constants", "print geometric constants and degree thresholds");
  cst_model.attach(cst);
  cst->add_option("--epsilon", cst_eps)->capture_default_str();
  auto* cst_k_opt = cst->add_option("--k", cst_k, "also classify this clique size");
  cst->callback([&] {
    action = [&] {
      const auto params = cst_model.params();
      const int d = params.dimension();
      const auto clique = clique_number_asymptotic(params);
      out << fmt::format("n={}\nd={}\nmu={}\nr={}\nalpha={}\n", params.n(), d, params.mu(),
                         params.radius(), params.alpha());
      out << fmt::format("phi_d={}\nc1={}\nc2={}\n", unit_ball_volume(d),
                         blocking_region_fraction(d), min_lens_fraction(d));
      out << fmt::format("T={}\nt={}\nregime={}\n", max_degree_threshold(params),
                         min_degree_threshold(params), to_string(degree_regime(params)));
      out << "clique_number=" << (clique.value ? fmt::format("{}", *clique.value) : "O(1)")
          << " (" << to_string(clique.regime) << ")\n";
      if (cst_k_opt->count()) {
        const auto v = classify_regime(params, cst_k, cst_eps);
        out << "vd_verdict=" << to_string(v.vd) << "\ncn_verdict=" << to_string(v.cn)
            << "\nnotes=" << v.notes << '\n';
      }
    };
  });

  std::vector<const char*> argv;
  argv.push_back("pclique");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    for (char& c : message) {
      if (c == '\n') c = ' ';
    }
    err << "error[usage]: " << message << '\n';
    return kExitUsage;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error[" << e.code() << "]: " << e.what() << '\n';
    const auto code = e.code();
    return code == "domain" || code == "instance" ? kExitDomain : kExitUsage;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace pclique
