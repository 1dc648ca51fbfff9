#include "d2d/protocol.hpp"

#include <cmath>

#include "d2d/errors.hpp"

namespace d2d {

namespace {

// Substream tags of one trial's random inputs. Keeping pattern, load
// thinning and gains on separate streams lets sweeps over a load reuse the
// same base pattern (common random numbers).
enum StreamTag : uint64_t {
  kPhiPattern = 0,
  kPhiLoadThin = 1,
  kPhiGains = 2,
  kPsiPattern = 3,
  kPsiLoadThin = 4,
  kPsiGains = 5,
  kLinkFading = 6,
};
constexpr uint64_t kStreamsPerTrial = 8;

double path_gain(double r, double mu) {
  if (mu == 4.0) {
    const double inv = 1.0 / (r * r);
    return inv * inv;
  }
  return std::pow(r, -mu);
}

double weighted_power_sum(const RadialPattern& pattern, const GainVector& gains,
                          double power, double mu) {
  double sum = 0.0;
  for (size_t i = 0; i < pattern.radii.size(); ++i) {
    sum += gains[i] * path_gain(pattern.radii[i], mu);
  }
  return power * sum;
}

RadialPattern sample_field(double density, const SystemParams& p,
                           const SimOptions& options, RngStream pattern_rng) {
  switch (options.model) {
    case PointProcessModel::Ppp:
      return sample_ppp_radii(density, p.window_radius, pattern_rng);
    case PointProcessModel::AlphaGpp:
      break;
  }
  return sample_alpha_gpp_radii(density, p.alpha, p.window_radius, pattern_rng);
}

}  // namespace

double incident_power(const RadialPattern& phi, const GainVector& gains,
                      double p_a, double mu) {
  return weighted_power_sum(phi, gains, p_a, mu);
}

double harvest_rate_backscatter(double p_incident, double beta, double eta) {
  return beta * eta * p_incident;
}

double harvest_rate_htt(double p_incident, double omega, double beta) {
  return omega * beta * p_incident;
}

double backscatter_snr(double p_incident, double h_sd, const SystemParams& p) {
  if (harvest_rate_backscatter(p_incident, p.beta, p.eta) <= p.rho_b) return 0.0;
  return p.delta * p_incident * (1.0 - p.eta) * h_sd /
         (std::pow(p.d, p.mu) * p.sigma2);
}

double htt_transmit_power(double p_incident, const SystemParams& p) {
  const double harvested = harvest_rate_htt(p_incident, p.omega, p.beta);
  if (harvested <= p.rho_h) return 0.0;
  return (harvested - p.rho_h) / (1.0 - p.omega);
}

double aggregate_interference(const RadialPattern& psi, const GainVector& gains,
                              double p_b, double mu) {
  return weighted_power_sum(psi, gains, p_b, mu);
}

double htt_sinr(double p_s, double h_tilde, double interference,
                const SystemParams& p) {
  if (p_s <= 0.0) return 0.0;
  return p_s * h_tilde * std::pow(p.d, -p.mu) / (interference + p.sigma2);
}

Mode select_mode(Protocol protocol, double p_incident,
                 std::optional<double> attempt_snr, const SystemParams& p) {
  Mode selected;
  switch (protocol) {
    case Protocol::Ptp:
      selected = harvest_rate_htt(p_incident, p.omega, p.beta) <= p.rho_h
                     ? Mode::Backscatter
                     : Mode::Htt;
      break;
    case Protocol::Stp:
      selected = (attempt_snr.value_or(0.0) > p.tau_b) ? Mode::Backscatter
                                                       : Mode::Htt;
      break;
    case Protocol::PureHtt:
      selected = Mode::Htt;
      break;
    case Protocol::PureBackscatter:
      selected = Mode::Backscatter;
      break;
    default:
      selected = Mode::EnergyOutage;
      break;
  }
  if (selected == Mode::Backscatter &&
      harvest_rate_backscatter(p_incident, p.beta, p.eta) <= p.rho_b) {
    return Mode::EnergyOutage;
  }
  if (selected == Mode::Htt &&
      harvest_rate_htt(p_incident, p.omega, p.beta) <= p.rho_h) {
    return Mode::EnergyOutage;
  }
  return selected;
}

TrialOutcome simulate_trial(const SystemParams& p, Protocol protocol,
                            const SimOptions& options, uint64_t master_seed,
                            uint64_t trial_index) {
  const uint64_t base = trial_index * kStreamsPerTrial;

  RadialPattern phi = sample_field(p.zeta_a, p, options,
                                   RngStream(master_seed, base + kPhiPattern));
  phi = thin(phi, p.l_a, RngStream(master_seed, base + kPhiLoadThin));
  RngStream phi_gain_rng(master_seed, base + kPhiGains);
  const GainVector phi_gains = sample_nakagami_power(p.m, phi.size(), phi_gain_rng);

  TrialOutcome outcome;
  outcome.p_incident = incident_power(phi, phi_gains, p.p_a, p.mu);

  RngStream fading(master_seed, base + kLinkFading);

  std::optional<double> attempt_snr;
  double attempt_h = 0.0;
  if (protocol == Protocol::Stp) {
    attempt_h = sample_rayleigh_power(fading);
    attempt_snr = backscatter_snr(outcome.p_incident, attempt_h, p);
  }

  outcome.mode = select_mode(protocol, outcome.p_incident, attempt_snr, p);

  switch (outcome.mode) {
    case Mode::EnergyOutage:
      outcome.success = false;
      outcome.snr_or_sinr = 0.0;
      break;
    case Mode::Backscatter: {
      double h_sd;
      if (protocol == Protocol::Stp) {
        h_sd = options.stp_shared_fading ? attempt_h : sample_rayleigh_power(fading);
      } else {
        h_sd = sample_rayleigh_power(fading);
      }
      outcome.snr_or_sinr = backscatter_snr(outcome.p_incident, h_sd, p);
      outcome.success = outcome.snr_or_sinr > p.tau_b;
      break;
    }
    case Mode::Htt: {
      RadialPattern psi = sample_field(p.zeta_b(), p, options,
                                       RngStream(master_seed, base + kPsiPattern));
      psi = thin(psi, p.l_b, RngStream(master_seed, base + kPsiLoadThin));
      RngStream psi_gain_rng(master_seed, base + kPsiGains);
      const GainVector psi_gains = sample_nakagami_power(p.m, psi.size(), psi_gain_rng);
      const double interference =
          aggregate_interference(psi, psi_gains, p.p_b, p.mu);
      const double p_s = htt_transmit_power(outcome.p_incident, p);
      const double h_tilde = sample_rayleigh_power(fading);
      outcome.snr_or_sinr = htt_sinr(p_s, h_tilde, interference, p);
      outcome.success = outcome.snr_or_sinr > p.tau_h;
      break;
    }
  }
  return outcome;
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Backscatter: return "backscatter";
    case Mode::Htt: return "htt";
    case Mode::EnergyOutage: return "energy_outage";
  }
  return "?";
}

std::string to_string(Protocol protocol) {
  switch (protocol) {
    case Protocol::Ptp: return "ptp";
    case Protocol::Stp: return "stp";
    case Protocol::PureHtt: return "pure_htt";
    case Protocol::PureBackscatter: return "pure_backscatter";
  }
  return "?";
}

std::string to_string(StpVariant variant) {
  return variant == StpVariant::Printed ? "printed" : "composed";
}

Protocol protocol_from_string(const std::string& name) {
  if (name == "ptp") return Protocol::Ptp;
  if (name == "stp") return Protocol::Stp;
  if (name == "pure_htt") return Protocol::PureHtt;
  if (name == "pure_backscatter") return Protocol::PureBackscatter;
  throw EvaluationError("unknown protocol '" + name + "'");
}

StpVariant stp_variant_from_string(const std::string& name) {
  if (name == "printed") return StpVariant::Printed;
  if (name == "composed") return StpVariant::Composed;
  throw EvaluationError("unknown stp variant '" + name + "'");
}

}  // namespace d2d
