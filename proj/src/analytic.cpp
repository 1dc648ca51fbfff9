#include "d2d/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "d2d/errors.hpp"
#include "d2d/parallel.hpp"

namespace d2d {

namespace {

// (1 + z)^-m with integer fast paths; principal branch otherwise. Re z > -1
// holds on every evaluation path (inversion nodes keep Re s > 0).
std::complex<double> pow_neg_m(std::complex<double> z, double m) {
  const std::complex<double> base = 1.0 + z;
  if (m == 1.0) return 1.0 / base;
  if (m == 2.0) return 1.0 / (base * base);
  if (m == 3.0) return 1.0 / (base * base * base);
  if (m == std::floor(m) && m > 0 && m <= 16.0) {
    std::complex<double> acc = 1.0;
    for (int i = 0; i < static_cast<int>(m); ++i) acc *= base;
    return 1.0 / acc;
  }
  return std::exp(-m * std::log(base));
}

double pow_neg_m_real(double z, double m) {
  const double base = 1.0 + z;
  if (m == 1.0) return 1.0 / base;
  if (m == 2.0) return 1.0 / (base * base);
  if (m == 3.0) return 1.0 / (base * base * base);
  return std::pow(base, -m);
}

double path_loss_pow(double r, double mu) {
  if (mu == 4.0) {
    const double r2 = r * r;
    return r2 * r2;
  }
  return std::pow(r, mu);
}

// prod_k (1 - alpha lambda_k)^(1/alpha) for the repulsive field; 0 when a
// factor underflows to the cut.
std::complex<double> repulsive_det_power(std::span<const std::complex<double>> eig,
                                         double alpha) {
  std::complex<double> log_sum = 0.0;
  for (const std::complex<double>& lambda : eig) {
    const std::complex<double> factor = 1.0 - alpha * lambda;
    if (factor == std::complex<double>(0.0, 0.0)) return 0.0;
    log_sum += std::log(factor);
  }
  return std::exp(log_sum / alpha);
}

double repulsive_det_power_real(std::span<const double> eig, double alpha) {
  double log_sum = 0.0;
  for (double lambda : eig) {
    const double factor = 1.0 - alpha * lambda;
    if (factor <= 0.0) return 0.0;
    log_sum += std::log(factor);
  }
  return std::exp(log_sum / alpha);
}

}  // namespace

PiDistribution::PiDistribution(const SystemParams& p, int n_threads)
    : p_(p), threads_(std::max(1, n_threads)) {
  const double density = p.l_a * p.zeta_a;
  if (density > 0.0) {
    basis_.emplace(density, p.window_radius);
  }
}

void PiDistribution::sample_modulation(std::complex<double> s,
                                       std::vector<std::complex<double>>& f_nodes) const {
  const auto& radii = basis_->node_radii();
  f_nodes.resize(radii.size());
  const std::complex<double> scale = s * (p_.p_a / p_.m);
  for (size_t j = 0; j < radii.size(); ++j) {
    const std::complex<double> z = scale / path_loss_pow(radii[j], p_.mu);
    f_nodes[j] = 1.0 - pow_neg_m(z, p_.m);
  }
}

std::complex<double> PiDistribution::laplace(std::complex<double> s) const {
  if (degenerate() || s == std::complex<double>(0.0, 0.0)) return 1.0;
  std::vector<std::complex<double>> f_nodes;
  sample_modulation(s, f_nodes);
  std::vector<std::complex<double>> eig(basis_->truncation());
  basis_->eigenvalues_from_nodes(f_nodes.data(), eig.data());
  return repulsive_det_power(eig, p_.alpha);
}

double PiDistribution::invert(double t, bool integrate) const {
  const std::vector<std::complex<double>> nodes = euler_nodes(t, inversion);
  std::vector<std::complex<double>> values(nodes.size());
  parallel_chunks(nodes.size(), 1, threads_, [&](size_t begin, size_t end) {
    for (size_t j = begin; j < end; ++j) {
      values[j] = laplace(nodes[j]);
      if (integrate) values[j] /= nodes[j];
    }
  });
  return euler_combine(values, t, inversion);
}

double PiDistribution::cdf(double rho) const {
  if (!(rho > 0.0)) return 0.0;
  if (degenerate()) return 1.0;
  return std::clamp(invert(rho, /*integrate=*/true), 0.0, 1.0);
}

double PiDistribution::pdf(double rho) const {
  if (!(rho > 0.0) || degenerate()) return 0.0;
  return invert(rho, /*integrate=*/false);
}

double PiDistribution::quantile(double prob) const {
  if (degenerate()) return 0.0;
  double lo = 0.0;
  double hi = 1e-6;
  int steps = 0;
  while (cdf(hi) < prob) {
    lo = hi;
    hi *= 2.0;
    if (++steps > 200) {
      throw EvaluationError("quantile: bracket not found in 200 doublings");
    }
  }
  for (int iter = 0; iter < 200 && hi - lo > 0.02 * hi; ++iter) {
    const double mid = lo > 0.0 ? std::sqrt(lo * hi) : 0.5 * hi;
    if (cdf(mid) >= prob) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

CoverageEvaluator::CoverageEvaluator(const SystemParams& p, int n_threads)
    : p_(p),
      threads_(std::max(1, n_threads)),
      thr_(derived_thresholds(p)),
      pi_(p, /*n_threads=*/1) {
  const double psi_density = p.l_b * p.xi * p.zeta_a;
  if (psi_density > 0.0) {
    psi_basis_.emplace(psi_density, p.window_radius);
  }
}

double CoverageEvaluator::interference_det_factor(double rho) const {
  if (!psi_basis_) return 1.0;
  const double supply = p_.omega * p_.beta * rho - p_.rho_h;
  if (supply <= 0.0) return 0.0;
  const double theta =
      p_.tau_h * path_loss_pow(p_.d, p_.mu) * (1.0 - p_.omega) * p_.p_b /
      (p_.m * supply);
  const auto& radii = psi_basis_->node_radii();
  std::vector<double> f_nodes(radii.size());
  for (size_t j = 0; j < radii.size(); ++j) {
    f_nodes[j] = 1.0 - pow_neg_m_real(theta / path_loss_pow(radii[j], p_.mu), p_.m);
  }
  std::vector<double> eig(psi_basis_->truncation());
  psi_basis_->eigenvalues_from_nodes(f_nodes.data(), eig.data());
  return repulsive_det_power_real(eig, p_.alpha);
}

double CoverageEvaluator::integrate_weighted_pdf(
    double lo, double hi, const std::function<double(double)>& weight,
    bool* converged) {
  if (!(hi > lo) || !(lo > 0.0)) {
    if (converged) *converged = true;
    return 0.0;
  }
  const GaussLegendreRule& rule = gauss_legendre(32);
  double prev = std::numeric_limits<double>::quiet_NaN();
  double result = 0.0;
  for (int n_panels = 8; n_panels <= 64; n_panels *= 2) {
    const std::vector<double> edges = geomspace(lo, hi, n_panels);
    const size_t n_nodes = static_cast<size_t>(n_panels) * rule.nodes.size();
    std::vector<double> nodes(n_nodes), node_weights(n_nodes), values(n_nodes);
    for (int panel = 0; panel < n_panels; ++panel) {
      const double mid = 0.5 * (edges[panel] + edges[panel + 1]);
      const double half = 0.5 * (edges[panel + 1] - edges[panel]);
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const size_t j = panel * rule.nodes.size() + i;
        nodes[j] = mid + half * rule.nodes[i];
        node_weights[j] = half * rule.weights[i];
      }
    }
    parallel_chunks(n_nodes, 2, threads_, [&](size_t begin, size_t end) {
      for (size_t j = begin; j < end; ++j) {
        values[j] = weight(nodes[j]) * std::max(pi_.pdf(nodes[j]), 0.0);
      }
    });
    result = 0.0;
    for (size_t j = 0; j < n_nodes; ++j) result += node_weights[j] * values[j];
    if (!std::isnan(prev) &&
        std::abs(result - prev) <= 1e-4 * std::max(std::abs(result), 1e-12)) {
      if (converged) *converged = true;
      return result;
    }
    prev = result;
  }
  if (converged) *converged = false;
  return result;
}

const CoverageBreakdown& CoverageEvaluator::evaluate() {
  if (breakdown_) return *breakdown_;
  CoverageBreakdown b;
  b.thr_backscatter = thr_.pi_min_backscatter;
  b.thr_htt = thr_.pi_min_htt;

  if (pi_.degenerate()) {
    // No incident power: every mode is an energy outage. The power-threshold
    // rule still "selects" backscattering with probability one.
    b.b_ptp = 1.0;
    breakdown_ = b;
    return *breakdown_;
  }

  b.rho_max = pi_.quantile(1.0 - 1e-4);
  b.rho_floor = pi_.quantile(1e-8);
  if (!(b.rho_floor < b.rho_max)) b.rho_floor = b.rho_max * 1e-9;

  const double d_mu = path_loss_pow(p_.d, p_.mu);
  const double backscatter_scale =
      p_.tau_b * d_mu * p_.sigma2 / (p_.delta * (1.0 - p_.eta));
  auto backscatter_weight = [backscatter_scale](double rho) {
    return std::exp(-backscatter_scale / rho);
  };
  const double htt_noise_scale = p_.tau_h * d_mu * p_.sigma2 * (1.0 - p_.omega);
  auto htt_weight = [&](double rho) {
    const double supply = p_.omega * p_.beta * rho - p_.rho_h;
    if (supply <= 0.0) return 0.0;
    return std::exp(-htt_noise_scale / supply) * interference_det_factor(rho);
  };

  bool conv = true;
  bool all_conv = true;

  b.c_backscatter = integrate_weighted_pdf(
      std::max(b.thr_backscatter, b.rho_floor), b.rho_max, backscatter_weight,
      &conv);
  all_conv &= conv;

  b.c_htt = integrate_weighted_pdf(std::max(b.thr_htt, b.rho_floor), b.rho_max,
                                   htt_weight, &conv);
  all_conv &= conv;

  b.b_ptp = pi_.cdf(b.thr_htt);

  // Power-threshold protocol, composed over the actual selection regions:
  // backscattering succeeds only where it is both selected (rho <= thr_htt)
  // and energy-feasible (rho > thr_backscatter).
  const double ptp_backscatter_term = integrate_weighted_pdf(
      std::max(b.thr_backscatter, b.rho_floor), std::min(b.thr_htt, b.rho_max),
      backscatter_weight, &conv);
  all_conv &= conv;
  b.c_ptp = ptp_backscatter_term + b.c_htt;
  b.c_ptp_published =
      b.b_ptp * b.c_backscatter + (1.0 - b.b_ptp) * b.c_htt;
  b.ptp_composition_gap = std::abs(b.c_ptp - b.c_ptp_published);

  const double tail_lo = std::min(b.rho_floor, 0.5 * b.thr_backscatter);
  b.stp_attempt_tail = integrate_weighted_pdf(
      tail_lo, std::min(b.thr_backscatter, b.rho_max), backscatter_weight, &conv);
  all_conv &= conv;

  b.c_stp_printed =
      b.c_htt * b.c_backscatter * b.c_backscatter + b.stp_attempt_tail;
  b.c_stp_composed = b.c_backscatter * b.c_backscatter +
                     (1.0 - b.c_backscatter) * b.c_htt;
  b.stp_variant_gap = std::abs(b.c_stp_printed - b.c_stp_composed);
  b.quadrature_converged = all_conv;

  breakdown_ = b;
  return *breakdown_;
}

double CoverageEvaluator::coverage_for(Protocol protocol, StpVariant variant) {
  switch (protocol) {
    case Protocol::Ptp: return coverage_ptp();
    case Protocol::Stp: return coverage_stp(variant);
    case Protocol::PureHtt: return coverage_htt();
    case Protocol::PureBackscatter: return coverage_backscatter();
  }
  throw EvaluationError("coverage_for: unknown protocol");
}

std::complex<double> laplace_pi(std::complex<double> s, const SystemParams& p) {
  return PiDistribution(p).laplace(s);
}

double cdf_pi(double rho, const SystemParams& p) { return PiDistribution(p).cdf(rho); }

double pdf_pi(double rho, const SystemParams& p) { return PiDistribution(p).pdf(rho); }

double prob_backscatter_ptp(const SystemParams& p) {
  return PiDistribution(p).cdf(derived_thresholds(p).pi_min_htt);
}

double coverage_backscatter(const SystemParams& p) {
  return CoverageEvaluator(p).coverage_backscatter();
}

double coverage_htt(const SystemParams& p) {
  return CoverageEvaluator(p).coverage_htt();
}

double coverage_ptp(const SystemParams& p) {
  return CoverageEvaluator(p).coverage_ptp();
}

double coverage_stp(const SystemParams& p, StpVariant variant) {
  return CoverageEvaluator(p).coverage_stp(variant);
}

double ppp_laplace_pi(double s, const SystemParams& p) {
  if (!(s >= 0.0)) throw EvaluationError("ppp_laplace_pi: s must be >= 0");
  const double density = p.l_a * p.zeta_a;
  if (s == 0.0 || density == 0.0) return 1.0;
  const double scale = s * p.p_a / p.m;
  auto integrand = [&](double r) {
    return (1.0 - pow_neg_m_real(scale / path_loss_pow(r, p.mu), p.m)) * r;
  };
  const double integral = adaptive_gauss_legendre<double>(
      integrand, 0.0, p.window_radius, 1e-10);
  return std::exp(-2.0 * std::numbers::pi * density * integral);
}

double enforce_monotone_cdf(std::span<double> values) {
  double max_violation = 0.0;
  double running = 0.0;
  for (double& v : values) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    max_violation = std::max(max_violation, std::abs(clamped - v));
    if (clamped < running) {
      max_violation = std::max(max_violation, running - clamped);
      v = running;
    } else {
      v = clamped;
      running = clamped;
    }
  }
  return max_violation;
}

}  // namespace d2d
