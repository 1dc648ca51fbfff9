#include "d2d/montecarlo.hpp"

#include <algorithm>
#include <chrono>

#include "d2d/errors.hpp"

namespace d2d {

CoverageEstimate estimate_coverage(const SystemParams& p, Protocol protocol,
                                   const SimOptions& options, uint64_t n_trials,
                                   uint64_t master_seed, int n_threads) {
  return detail::estimate_from_trials(n_trials, n_threads, [&](uint64_t i) {
    return simulate_trial(p, protocol, options, master_seed, i);
  });
}

std::vector<double> sample_incident_power(const SystemParams& p,
                                          const SimOptions& options, uint64_t n,
                                          uint64_t master_seed, int n_threads) {
  std::vector<double> samples(n);
  parallel_chunks(n, 256, n_threads, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      // PureBackscatter trials compute the incident power without touching
      // the interferer field; this keeps the draws stream-identical to the
      // ones inside coverage estimates at the same seed.
      samples[i] =
          simulate_trial(p, Protocol::PureBackscatter, options, master_seed, i)
              .p_incident;
    }
  });
  return samples;
}

EmpiricalCdf empirical_pi_cdf(const SystemParams& p, const SimOptions& options,
                              uint64_t n_trials, uint64_t master_seed,
                              std::vector<double> grid, int n_threads) {
  for (size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] < grid[i - 1]) {
      throw EvaluationError("empirical_pi_cdf grid must be ascending");
    }
  }
  std::vector<double> samples =
      sample_incident_power(p, options, n_trials, master_seed, n_threads);
  std::sort(samples.begin(), samples.end());
  EmpiricalCdf out;
  out.grid = std::move(grid);
  out.cdf_values.reserve(out.grid.size());
  const double n = static_cast<double>(std::max<uint64_t>(n_trials, 1));
  for (double x : out.grid) {
    const auto it = std::upper_bound(samples.begin(), samples.end(), x);
    out.cdf_values.push_back(static_cast<double>(it - samples.begin()) / n);
  }
  return out;
}

const std::map<std::string, double SystemParams::*>& sweep_axes() {
  static const std::map<std::string, double SystemParams::*> axes = {
      {"p_a", &SystemParams::p_a},       {"p_b", &SystemParams::p_b},
      {"zeta_a", &SystemParams::zeta_a}, {"xi", &SystemParams::xi},
      {"l_a", &SystemParams::l_a},       {"l_b", &SystemParams::l_b},
      {"alpha", &SystemParams::alpha},   {"window_radius", &SystemParams::window_radius},
      {"mu", &SystemParams::mu},         {"m", &SystemParams::m},
      {"d", &SystemParams::d},           {"beta", &SystemParams::beta},
      {"eta", &SystemParams::eta},       {"delta", &SystemParams::delta},
      {"omega", &SystemParams::omega},   {"rho_b", &SystemParams::rho_b},
      {"rho_h", &SystemParams::rho_h},   {"tau_b", &SystemParams::tau_b},
      {"tau_h", &SystemParams::tau_h},   {"sigma2", &SystemParams::sigma2},
  };
  return axes;
}

std::vector<RunRecord> sweep(const SystemParams& base, const std::string& axis,
                             const std::vector<double>& values,
                             const std::vector<Protocol>& protocols,
                             const SimOptions& options, uint64_t n_trials,
                             uint64_t master_seed, int n_threads) {
  const auto it = sweep_axes().find(axis);
  if (it == sweep_axes().end()) {
    throw EvaluationError("unknown sweep axis '" + axis + "'");
  }
  std::vector<RunRecord> records;
  records.reserve(values.size() * protocols.size());
  for (double value : values) {
    SystemParams p = base;
    p.*(it->second) = value;
    p = validate(p);
    for (Protocol protocol : protocols) {
      const auto start = std::chrono::steady_clock::now();
      const CoverageEstimate est =
          estimate_coverage(p, protocol, options, n_trials, master_seed, n_threads);
      const auto stop = std::chrono::steady_clock::now();
      RunRecord r;
      r.params = p;
      r.protocol = protocol;
      r.method = "montecarlo";
      r.stp_shared_fading = options.stp_shared_fading;
      r.coverage = est.coverage;
      r.std_err = est.std_err;
      r.mode_fractions = est.mode_fractions;
      r.mean_conditional_snr = est.mean_conditional_snr;
      r.n_trials = n_trials;
      r.seed = master_seed;
      r.wall_time_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      records.push_back(std::move(r));
    }
  }
  return records;
}

}  // namespace d2d
