#pragma once

#include <optional>
#include <string>

#include "d2d/channel.hpp"
#include "d2d/params.hpp"
#include "d2d/pointproc.hpp"

namespace d2d {

enum class Mode { Backscatter, Htt, EnergyOutage };

enum class Protocol { Ptp, Stp, PureHtt, PureBackscatter };

/// Which expression evaluates the SNR-threshold protocol analytically:
/// Printed is the published two-term formula with the squared backscatter
/// integral; Composed is the mode-split identity C_B^2 + (1 - C_B) C_H.
enum class StpVariant { Printed, Composed };

enum class PointProcessModel { AlphaGpp, Ppp };

struct SimOptions {
  PointProcessModel model = PointProcessModel::AlphaGpp;
  /// STP only: reuse the attempt's link fading draw for the committed
  /// backscatter transmission instead of redrawing it.
  bool stp_shared_fading = false;
};

struct TrialOutcome {
  Mode mode = Mode::EnergyOutage;
  bool success = false;
  double p_incident = 0.0;
  double snr_or_sinr = 0.0;  ///< committed mode's SNR/SINR, 0 on outage
};

/// Incident RF power at the harvester: sum of p_a * h * r^-mu over the field.
double incident_power(const RadialPattern& phi, const GainVector& gains,
                      double p_a, double mu);

/// Harvest rate while backscattering: beta * eta * p_incident.
double harvest_rate_backscatter(double p_incident, double beta, double eta);

/// Harvest rate in the HTT harvesting phase: omega * beta * p_incident.
double harvest_rate_htt(double p_incident, double omega, double beta);

/// Received backscatter SNR; 0 unless the backscatter circuit is powered
/// (beta*eta*p_incident > rho_b).
double backscatter_snr(double p_incident, double h_sd, const SystemParams& p);

/// Active transmit power under HTT; 0 unless omega*beta*p_incident > rho_h.
double htt_transmit_power(double p_incident, const SystemParams& p);

/// Aggregate interferer power at the receiver: sum of p_b * h * r^-mu.
double aggregate_interference(const RadialPattern& psi, const GainVector& gains,
                              double p_b, double mu);

/// Received SINR of the active transmission; 0 when p_s is 0.
double htt_sinr(double p_s, double h_tilde, double interference,
                const SystemParams& p);

/// Mode selection. attempt_snr is the trial backscatter SNR and must be
/// supplied for Stp (it already encodes the rho_b energy gate). The selected
/// mode downgrades to EnergyOutage when its own circuit threshold fails.
Mode select_mode(Protocol protocol, double p_incident,
                 std::optional<double> attempt_snr, const SystemParams& p);

/// One slot end to end: sample both ambient fields and all fading, pick the
/// mode, evaluate success. Pure function of (params, protocol, options,
/// master_seed, trial_index); every random input comes from a substream keyed
/// by the trial index, so any scheduling of trials over workers reproduces
/// the same outcomes.
TrialOutcome simulate_trial(const SystemParams& p, Protocol protocol,
                            const SimOptions& options, uint64_t master_seed,
                            uint64_t trial_index);

std::string to_string(Mode mode);
std::string to_string(Protocol protocol);
std::string to_string(StpVariant variant);
Protocol protocol_from_string(const std::string& name);
StpVariant stp_variant_from_string(const std::string& name);

}  // namespace d2d
