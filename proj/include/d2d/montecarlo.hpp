#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "d2d/parallel.hpp"
#include "d2d/protocol.hpp"
#include "d2d/run_record.hpp"

namespace d2d {

struct CoverageEstimate {
  double coverage = 0.0;
  double std_err = 0.0;
  uint64_t n_trials = 0;
  ModeFractions mode_fractions;
  double mean_conditional_snr = 0.0;  ///< mean SNR/SINR over non-outage trials
};

struct EmpiricalCdf {
  std::vector<double> grid;        ///< ascending, watts
  std::vector<double> cdf_values;  ///< nondecreasing, in [0, 1]
};

/// Mean success rate over n independent trials. Trial i always consumes the
/// substreams keyed by (master_seed, i), and partial sums are reduced over
/// fixed-size chunks in index order, so the estimate is bitwise identical for
/// every worker count.
CoverageEstimate estimate_coverage(const SystemParams& p, Protocol protocol,
                                   const SimOptions& options, uint64_t n_trials,
                                   uint64_t master_seed, int n_threads = 0);

/// Incident-power draws from the same per-trial streams the coverage
/// estimator uses (common random numbers with it by construction).
std::vector<double> sample_incident_power(const SystemParams& p,
                                          const SimOptions& options, uint64_t n,
                                          uint64_t master_seed, int n_threads = 0);

/// Fraction of sampled incident powers at or below each grid point.
EmpiricalCdf empirical_pi_cdf(const SystemParams& p, const SimOptions& options,
                              uint64_t n_trials, uint64_t master_seed,
                              std::vector<double> grid, int n_threads = 0);

/// Sweepable numeric fields, keyed by config name.
const std::map<std::string, double SystemParams::*>& sweep_axes();

/// One Monte Carlo record per (axis value, protocol). Every value reuses the
/// same trial-indexed streams (common random numbers across the sweep).
/// Throws EvaluationError for an unknown axis.
std::vector<RunRecord> sweep(const SystemParams& base, const std::string& axis,
                             const std::vector<double>& values,
                             const std::vector<Protocol>& protocols,
                             const SimOptions& options, uint64_t n_trials,
                             uint64_t master_seed, int n_threads = 0);

namespace detail {

/// Estimator core shared with tests: trial_fn(i) -> TrialOutcome.
template <class TrialFn>
CoverageEstimate estimate_from_trials(uint64_t n_trials, int n_threads,
                                      TrialFn&& trial_fn) {
  constexpr size_t kChunk = 1024;
  struct Partial {
    uint64_t success = 0, backscatter = 0, htt = 0, outage = 0;
    double snr_sum = 0.0, snr_comp = 0.0;  // Kahan pair
  };
  const size_t n_chunks = (n_trials + kChunk - 1) / kChunk;
  std::vector<Partial> partials(n_chunks);

  parallel_chunks(n_trials, kChunk, n_threads, [&](size_t begin, size_t end) {
    Partial acc;
    for (size_t i = begin; i < end; ++i) {
      const TrialOutcome t = trial_fn(static_cast<uint64_t>(i));
      acc.success += t.success ? 1 : 0;
      switch (t.mode) {
        case Mode::Backscatter: ++acc.backscatter; break;
        case Mode::Htt: ++acc.htt; break;
        case Mode::EnergyOutage: ++acc.outage; break;
      }
      if (t.mode != Mode::EnergyOutage) {
        const double y = t.snr_or_sinr - acc.snr_comp;
        const double s = acc.snr_sum + y;
        acc.snr_comp = (s - acc.snr_sum) - y;
        acc.snr_sum = s;
      }
    }
    partials[begin / kChunk] = acc;
  });

  Partial total;
  double comp = 0.0;
  for (const Partial& part : partials) {
    total.success += part.success;
    total.backscatter += part.backscatter;
    total.htt += part.htt;
    total.outage += part.outage;
    const double y = part.snr_sum - comp;
    const double s = total.snr_sum + y;
    comp = (s - total.snr_sum) - y;
    total.snr_sum = s;
  }

  CoverageEstimate est;
  est.n_trials = n_trials;
  if (n_trials == 0) return est;
  const double n = static_cast<double>(n_trials);
  est.coverage = static_cast<double>(total.success) / n;
  est.std_err = std::sqrt(est.coverage * (1.0 - est.coverage) / n);
  est.mode_fractions.backscatter = static_cast<double>(total.backscatter) / n;
  est.mode_fractions.htt = static_cast<double>(total.htt) / n;
  est.mode_fractions.energy_outage = static_cast<double>(total.outage) / n;
  const uint64_t active = total.backscatter + total.htt;
  est.mean_conditional_snr =
      active > 0 ? total.snr_sum / static_cast<double>(active) : 0.0;
  return est;
}

}  // namespace detail

}  // namespace d2d
