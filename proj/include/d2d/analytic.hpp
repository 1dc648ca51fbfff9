#pragma once

#include <complex>
#include <optional>
#include <span>

#include "d2d/laplace.hpp"
#include "d2d/params.hpp"
#include "d2d/protocol.hpp"
#include "d2d/spectral.hpp"

namespace d2d {

/// Distribution of the incident RF power at the harvester, evaluated through
/// its Laplace transform: the repulsion-factor power of the Fredholm
/// determinant of the fading-modulated Ginibre kernel at density l_a*zeta_a,
/// numerically inverted for the CDF and PDF.
///
/// Note on signs: the repulsive family's Laplace functional is
/// prod_k (1 - alpha * lambda_k)^(1/alpha), i.e. the literal determinant
/// power evaluated at the negated repulsion factor. At alpha = 1 this is the
/// plain determinantal formula, and as alpha -> 0 it tends to the Poisson
/// exponential; both limits pin the sign.
class PiDistribution {
 public:
  explicit PiDistribution(const SystemParams& p, int n_threads = 1);

  /// True when l_a * zeta_a == 0, so the incident power is identically 0.
  bool degenerate() const { return !basis_.has_value(); }

  std::complex<double> laplace(std::complex<double> s) const;
  double cdf(double rho) const;  ///< clamped to [0, 1]
  double pdf(double rho) const;  ///< raw inversion value, may carry tiny noise

  /// Smallest bracketed point with cdf >= prob, from geometric doubling plus
  /// bisection (at most 200 steps each; throws EvaluationError on failure).
  double quantile(double prob) const;

  const GinibreModeBasis& basis() const { return *basis_; }
  const SystemParams& params() const { return p_; }

  InverseLaplaceConfig inversion;

 private:
  double invert(double t, bool integrate) const;
  void sample_modulation(std::complex<double> s,
                         std::vector<std::complex<double>>& f_nodes) const;

  SystemParams p_;
  int threads_;
  std::optional<GinibreModeBasis> basis_;
};

/// Everything the coverage expressions need at one parameter point, cached.
struct CoverageBreakdown {
  double thr_backscatter = 0.0;  ///< rho_b / (beta eta)
  double thr_htt = 0.0;          ///< rho_h / (omega beta)
  double rho_floor = 0.0;        ///< ~1e-8 quantile of P_I
  double rho_max = 0.0;          ///< ~(1 - 1e-4) quantile of P_I
  double b_ptp = 0.0;            ///< F_PI(thr_htt)
  double c_backscatter = 0.0;    ///< always-backscatter coverage
  double c_htt = 0.0;            ///< always-HTT coverage
  double c_ptp = 0.0;            ///< power-threshold protocol coverage
  double c_ptp_published = 0.0;  ///< two-term weighted composition (diagnostic)
  double ptp_composition_gap = 0.0;
  double stp_attempt_tail = 0.0;  ///< integral of the backscatter success
                                  ///< weight below thr_backscatter
  double c_stp_composed = 0.0;
  double c_stp_printed = 0.0;
  double stp_variant_gap = 0.0;
  bool quadrature_converged = true;
};

/// Evaluates the closed-form coverage expressions at one parameter point.
/// The incident-power PDF, the interferer-kernel determinants and the outer
/// integrals are shared between all protocol compositions.
class CoverageEvaluator {
 public:
  explicit CoverageEvaluator(const SystemParams& p, int n_threads = 1);

  const CoverageBreakdown& evaluate();

  double coverage_backscatter() { return evaluate().c_backscatter; }
  double coverage_htt() { return evaluate().c_htt; }
  double prob_backscatter_ptp() { return evaluate().b_ptp; }
  double coverage_ptp() { return evaluate().c_ptp; }
  double coverage_stp(StpVariant variant) {
    return variant == StpVariant::Printed ? evaluate().c_stp_printed
                                          : evaluate().c_stp_composed;
  }
  double coverage_for(Protocol protocol, StpVariant variant = StpVariant::Composed);

  const PiDistribution& pi_distribution() const { return pi_; }
  /// Fredholm-determinant factor of the interferer field at outer node rho.
  double interference_det_factor(double rho) const;

 private:
  double integrate_weighted_pdf(double lo, double hi,
                                const std::function<double(double)>& weight,
                                bool* converged);

  SystemParams p_;
  int threads_;
  Thresholds thr_;
  PiDistribution pi_;
  std::optional<GinibreModeBasis> psi_basis_;
  std::optional<CoverageBreakdown> breakdown_;
};

/// Laplace transform of the incident power (spec-level convenience wrappers;
/// the classes above are the efficient interface for repeated evaluation).
std::complex<double> laplace_pi(std::complex<double> s, const SystemParams& p);
double cdf_pi(double rho, const SystemParams& p);
double pdf_pi(double rho, const SystemParams& p);
double prob_backscatter_ptp(const SystemParams& p);
double coverage_backscatter(const SystemParams& p);
double coverage_htt(const SystemParams& p);
double coverage_ptp(const SystemParams& p);
double coverage_stp(const SystemParams& p, StpVariant variant);

/// Closed-form Poisson-field Laplace transform
/// exp(-2 pi l_a zeta_a integral_0^R f_s(r) r dr); the alpha -> 0 oracle.
double ppp_laplace_pi(double s, const SystemParams& p);

/// Makes the values of an ascending-grid CDF evaluation nondecreasing in
/// [0, 1] in place; returns the largest raw violation (diagnostic: values
/// above ~1e-4 indicate inversion trouble).
double enforce_monotone_cdf(std::span<double> values);

}  // namespace d2d
