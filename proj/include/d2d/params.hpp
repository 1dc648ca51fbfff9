#pragma once

#include <string>

#include "d2d/errors.hpp"

namespace d2d {

/// Every physical input of the link model, SI units, linear scale.
/// Decibel values are accepted only at the config boundary and converted on
/// load; nothing downstream ever sees dB.
///
/// Defaults reproduce the reference operating point: two 0.2 W ambient
/// fields, Ginibre geometry (alpha = 1) on a 100 m window, path loss
/// exponent 4 over a 5 m link, equal-split harvesting slots.
struct SystemParams {
  double p_a = 0.2;        ///< transmit power of the energy-source field, W
  double p_b = 0.2;        ///< transmit power of the interferer field, W
  double zeta_a = 0.02;    ///< spatial density of the source field, 1/m^2
  double xi = 0.2;         ///< interferer-to-source density ratio
  double l_a = 1.0;        ///< transmission load (activity prob.) of sources
  double l_b = 1.0;        ///< transmission load of interferers
  double alpha = 1.0;      ///< repulsion factor, (0, 1]
  double window_radius = 100.0;  ///< observation window radius, m
  double mu = 4.0;         ///< path-loss exponent, > 2
  double m = 1.0;          ///< Nakagami shape of ambient links, >= 0.5
  double d = 5.0;          ///< transmitter-receiver distance, m
  double beta = 0.3;       ///< RF-to-DC conversion efficiency, (0, 1]
  double eta = 0.625;      ///< rectified fraction while backscattering, (0, 1)
  double delta = 1.0;      ///< backscatter antenna efficiency, (0, 1]
  double omega = 0.5;      ///< harvesting time fraction in HTT slots, (0, 1)
  double rho_b = 8.9e-6;   ///< circuit power, backscatter mode, W
  double rho_h = 113e-6;   ///< circuit power, HTT mode, W
  double tau_b = 3.1622776601683795;  ///< backscatter SNR threshold (5 dB)
  double tau_h = 1e-4;     ///< HTT SINR threshold (-40 dB)
  double sigma2 = 1e-12;   ///< noise power, W (-90 dBm)
  double t_b = 1000.0;     ///< backscatter data rate, bit/s (metadata only)

  /// Interferer density is always derived, never stored.
  double zeta_b() const { return xi * zeta_a; }

  bool operator==(const SystemParams&) const = default;
};

/// Minimum incident power for each mode's circuit to run.
struct Thresholds {
  double pi_min_backscatter;  ///< rho_b / (beta * eta)
  double pi_min_htt;          ///< rho_h / (omega * beta)
};

/// Checks every invariant; returns the input unchanged on success.
/// Throws ValidationError naming the offending field and its bound.
/// Densities and loads may be zero (degenerate but well-defined: the field is
/// empty); powers, distances and the window must be strictly positive.
SystemParams validate(const SystemParams& p);

Thresholds derived_thresholds(const SystemParams& p);

double db_to_ratio(double db);
double dbm_to_watts(double dbm);
double ratio_to_db(double ratio);

/// Loads params from a JSON object file. Keys are the field names above
/// ("window_radius" also accepts "R"); dB alternates `tau_b_db`, `tau_h_db`
/// and `sigma2_dbm` are converted on load. Unknown keys are an error.
/// The result is validated.
SystemParams params_from_json_file(const std::string& path);
SystemParams params_from_json_text(const std::string& text);

}  // namespace d2d
