#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "d2d/params.hpp"
#include "d2d/protocol.hpp"

namespace d2d {

struct ModeFractions {
  double backscatter = 0.0;
  double htt = 0.0;
  double energy_outage = 0.0;
  bool operator==(const ModeFractions&) const = default;
};

/// One (parameters, protocol, method) evaluation, serializable for sweeps
/// and figure datasets.
struct RunRecord {
  SystemParams params;
  Protocol protocol = Protocol::Ptp;
  std::string method;  ///< "analytic" or "montecarlo"
  StpVariant stp_variant = StpVariant::Composed;
  bool stp_shared_fading = false;
  double coverage = 0.0;
  std::optional<double> std_err;  ///< Monte Carlo only
  std::optional<ModeFractions> mode_fractions;
  std::optional<double> mean_conditional_snr;
  uint64_t n_trials = 0;  ///< 0 for analytic records
  uint64_t seed = 0;
  double wall_time_ms = 0.0;

  bool operator==(const RunRecord&) const = default;
};

/// Stable CSV schema; documented in the README. `wall_time_ms` is the last
/// column so determinism checks can strip it.
std::string run_record_csv_header();
std::string run_record_csv_row(const RunRecord& r);
void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);

std::string records_to_json_text(const std::vector<RunRecord>& records);
std::vector<RunRecord> records_from_json_text(const std::string& text);

}  // namespace d2d
