// Batch front-end: load a config, run the analytic and/or Monte Carlo
// pipelines, sweep parameters, reproduce figure datasets. Exit codes:
// 0 ok, 2 config error, 3 parameter validation error, 4 evaluator error.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "d2d/analytic.hpp"
#include "d2d/figures.hpp"
#include "d2d/montecarlo.hpp"
#include "d2d/run_record.hpp"

namespace fs = std::filesystem;
using namespace d2d;

namespace {

struct CliFlags {
  std::string config_path;
  std::string protocol = "ptp";
  std::string method = "analytic";
  uint64_t trials = 100000;
  uint64_t seed = 12345;
  int threads = 0;
  std::string stp_variant = "composed";
  bool stp_shared_fading = false;
  bool use_ppp = false;
  std::string sweep_spec;
  std::string figure;
  std::string out_dir = ".";
  bool dump_eigenvalues = false;
  bool dump_pattern = false;
};

std::pair<std::string, std::vector<double>> parse_sweep_spec(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size()) {
    throw ConfigError("--sweep expects FIELD=v1,v2,...");
  }
  std::string field = spec.substr(0, eq);
  std::vector<double> values;
  std::stringstream ss(spec.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("--sweep: cannot parse value '" + item + "'");
    }
  }
  if (values.empty()) throw ConfigError("--sweep: no values given");
  return {field, values};
}

RunRecord mc_record(const SystemParams& p, Protocol protocol, const SimOptions& sim,
                    uint64_t trials, uint64_t seed, int threads, StpVariant variant) {
  const auto start = std::chrono::steady_clock::now();
  const CoverageEstimate est =
      estimate_coverage(p, protocol, sim, trials, seed, threads);
  const auto stop = std::chrono::steady_clock::now();
  RunRecord r;
  r.params = p;
  r.protocol = protocol;
  r.method = "montecarlo";
  r.stp_variant = variant;
  r.stp_shared_fading = sim.stp_shared_fading;
  r.coverage = est.coverage;
  r.std_err = est.std_err;
  r.mode_fractions = est.mode_fractions;
  r.mean_conditional_snr = est.mean_conditional_snr;
  r.n_trials = trials;
  r.seed = seed;
  r.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

void write_outputs(const fs::path& out_dir, const std::vector<RunRecord>& records,
                   uint64_t seed) {
  fs::create_directories(out_dir);
  std::ofstream csv(out_dir / "results.csv");
  write_records_csv(csv, records);
  std::ofstream json(out_dir / "results.json");
  json << records_to_json_text(records);
  (void)seed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid backscatter / harvest-then-transmit D2D coverage"};
  CliFlags flags;

  app.add_option("--config", flags.config_path, "JSON parameter file");
  app.add_option("--protocol", flags.protocol, "ptp|stp|pure_htt|pure_backscatter")
      ->check(CLI::IsMember({"ptp", "stp", "pure_htt", "pure_backscatter"}));
  app.add_option("--method", flags.method, "analytic|mc|both")
      ->check(CLI::IsMember({"analytic", "mc", "both"}));
  app.add_option("--trials", flags.trials, "Monte Carlo trials per estimate");
  app.add_option("--seed", flags.seed, "master seed");
  app.add_option("--threads", flags.threads,
                 "worker threads (0 = hardware, or D2D_THREADS)");
  app.add_option("--stp-variant", flags.stp_variant, "printed|composed")
      ->check(CLI::IsMember({"printed", "composed"}));
  app.add_flag("--stp-shared-fading", flags.stp_shared_fading,
               "reuse the STP attempt fading draw for the committed slot");
  app.add_flag("--ppp", flags.use_ppp,
               "sample ambient fields as Poisson instead of alpha-Ginibre");
  app.add_option("--sweep", flags.sweep_spec, "FIELD=v1,v2,... parameter sweep");
  app.add_option("--figure", flags.figure, "fig2|fig3|fig4a|fig4b dataset")
      ->check(CLI::IsMember({"fig2", "fig3", "fig4a", "fig4b"}));
  app.add_option("--out", flags.out_dir, "output directory");
  app.add_flag("--dump-eigenvalues", flags.dump_eigenvalues,
               "write eigenvalues.csv (window spectrum of the source kernel)");
  app.add_flag("--dump-pattern", flags.dump_pattern,
               "write pattern.csv (one sampled source pattern)");

  // Parameter overrides; only flags the user passed are applied.
  struct Override {
    CLI::Option* opt;
    double SystemParams::* member;
    double value = 0.0;
  };
  std::vector<std::unique_ptr<Override>> override_list;
  auto add_override = [&](const std::string& name, double SystemParams::* member) {
    auto entry = std::make_unique<Override>();
    entry->member = member;
    entry->opt = app.add_option(name, entry->value);
    override_list.push_back(std::move(entry));
  };
  add_override("--p-a", &SystemParams::p_a);
  add_override("--p-b", &SystemParams::p_b);
  add_override("--zeta-a", &SystemParams::zeta_a);
  add_override("--xi", &SystemParams::xi);
  add_override("--l-a", &SystemParams::l_a);
  add_override("--l-b", &SystemParams::l_b);
  add_override("--alpha", &SystemParams::alpha);
  add_override("--window-radius", &SystemParams::window_radius);
  add_override("--mu", &SystemParams::mu);
  add_override("--m", &SystemParams::m);
  add_override("--d", &SystemParams::d);
  add_override("--beta", &SystemParams::beta);
  add_override("--eta", &SystemParams::eta);
  add_override("--delta", &SystemParams::delta);
  add_override("--omega", &SystemParams::omega);
  add_override("--rho-b", &SystemParams::rho_b);
  add_override("--rho-h", &SystemParams::rho_h);
  add_override("--tau-b", &SystemParams::tau_b);
  add_override("--tau-h", &SystemParams::tau_h);
  add_override("--sigma2", &SystemParams::sigma2);
  add_override("--t-b", &SystemParams::t_b);
  double tau_b_db = 0, tau_h_db = 0, sigma2_dbm = 0;
  auto* opt_tau_b_db = app.add_option("--tau-b-db", tau_b_db);
  auto* opt_tau_h_db = app.add_option("--tau-h-db", tau_h_db);
  auto* opt_sigma2_dbm = app.add_option("--sigma2-dbm", sigma2_dbm);

  CLI11_PARSE(app, argc, argv);

  try {
    SystemParams params;
    if (!flags.config_path.empty()) {
      params = params_from_json_file(flags.config_path);
    }
    for (const auto& entry : override_list) {
      if (entry->opt->count() > 0) params.*(entry->member) = entry->value;
    }
    if (opt_tau_b_db->count() > 0) params.tau_b = db_to_ratio(tau_b_db);
    if (opt_tau_h_db->count() > 0) params.tau_h = db_to_ratio(tau_h_db);
    if (opt_sigma2_dbm->count() > 0) params.sigma2 = dbm_to_watts(sigma2_dbm);
    params = validate(params);

    SimOptions sim;
    sim.model = flags.use_ppp ? PointProcessModel::Ppp : PointProcessModel::AlphaGpp;
    sim.stp_shared_fading = flags.stp_shared_fading;
    const StpVariant variant = stp_variant_from_string(flags.stp_variant);
    const Protocol protocol = protocol_from_string(flags.protocol);
    const fs::path out_dir(flags.out_dir);

    std::vector<RunRecord> records;
    if (!flags.figure.empty()) {
      FigureOptions fopt;
      fopt.include_mc = flags.method != "analytic";
      fopt.trials = flags.trials;
      fopt.seed = flags.seed;
      fopt.threads = flags.threads;
      fopt.sim = sim;
      fopt.stp_variant = variant;
      const Figure figure = figure_from_string(flags.figure);
      records = figure_dataset(figure, params, fopt);
      fs::create_directories(out_dir);
      std::ofstream fig_csv(out_dir / (flags.figure + ".csv"));
      const bool grid_cols = figure == Figure::Fig2 || figure == Figure::Fig3;
      write_figure_csv(fig_csv, records, grid_cols);
      write_outputs(out_dir, records, flags.seed);
    } else if (!flags.sweep_spec.empty()) {
      const auto [axis, values] = parse_sweep_spec(flags.sweep_spec);
      if (flags.method != "analytic") {
        auto mc = sweep(params, axis, values, {protocol}, sim, flags.trials,
                        flags.seed, flags.threads);
        records.insert(records.end(), mc.begin(), mc.end());
      }
      if (flags.method != "mc") {
        const auto it = sweep_axes().find(axis);
        if (it == sweep_axes().end()) {
          throw EvaluationError("unknown sweep axis '" + axis + "'");
        }
        for (double value : values) {
          SystemParams p = params;
          p.*(it->second) = value;
          auto rows = analytic_records(validate(p), {protocol}, variant,
                                       flags.threads);
          records.insert(records.end(), rows.begin(), rows.end());
        }
      }
      write_outputs(out_dir, records, flags.seed);
    } else {
      if (flags.method != "mc") {
        auto rows = analytic_records(params, {protocol}, variant, flags.threads);
        records.insert(records.end(), rows.begin(), rows.end());
      }
      if (flags.method != "analytic") {
        records.push_back(mc_record(params, protocol, sim, flags.trials,
                                    flags.seed, flags.threads, variant));
      }
      write_outputs(out_dir, records, flags.seed);
    }

    if (flags.dump_eigenvalues) {
      fs::create_directories(out_dir);
      std::ofstream csv(out_dir / "eigenvalues.csv");
      csv << "k,lambda_k\n";
      const double density = params.l_a * params.zeta_a;
      if (density > 0) {
        const SpectralOperator op = make_spectral_operator(
            [](double) { return std::complex<double>(1.0, 0.0); }, density,
            params.window_radius);
        for (int k = 0; k < op.truncation; ++k) {
          csv << k << ',' << op.eigenvalues[k].real() << '\n';
        }
      }
    }
    if (flags.dump_pattern) {
      fs::create_directories(out_dir);
      std::ofstream csv(out_dir / "pattern.csv");
      const RadialPattern pattern = sample_alpha_gpp_radii(
          params.zeta_a, params.alpha, params.window_radius,
          RngStream(flags.seed, 0));
      write_pattern_csv(csv, pattern);
    }

    for (const RunRecord& r : records) {
      std::cout << to_string(r.protocol) << ' ' << r.method
                << " coverage=" << r.coverage;
      if (r.std_err) std::cout << " +/- " << *r.std_err;
      std::cout << '\n';
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
    return 4;
  }
}
