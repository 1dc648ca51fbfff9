#include "d2d/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "d2d/errors.hpp"

namespace d2d {

namespace {

// ln of the mode-k weight density in u-space: u^k e^-u / k!.
double log_mode_weight_u(int k, double u, double lgamma_k1) {
  if (u <= 0.0) return k == 0 ? -u : -std::numeric_limits<double>::infinity();
  return k * std::log(u) - u - lgamma_k1;
}

}  // namespace

std::complex<double> fredholm_det_alpha(std::span<const std::complex<double>> eigenvalues,
                                        double alpha) {
  if (alpha == 0.0) {
    throw EvaluationError("fredholm_det_alpha: alpha must be nonzero");
  }
  std::complex<double> log_sum = 0.0;
  for (size_t k = 0; k < eigenvalues.size(); ++k) {
    const std::complex<double> factor = 1.0 + alpha * eigenvalues[k];
    if (std::abs(factor) < 1e-12) {
      throw EvaluationError("fredholm_det_alpha: near-singular factor at mode " +
                            std::to_string(k));
    }
    log_sum += std::log(factor);
  }
  return std::exp(-log_sum / alpha);
}

std::complex<double> fredholm_det_alpha(const SpectralOperator& op, double alpha) {
  return fredholm_det_alpha(std::span<const std::complex<double>>(op.eigenvalues),
                            alpha);
}

int spectral_truncation(double density, double window_radius) {
  const double u = std::numbers::pi * density * window_radius * window_radius;
  return static_cast<int>(std::ceil(u)) +
         static_cast<int>(std::ceil(10.0 * std::sqrt(u))) + 16;
}

std::complex<double> mode_eigenvalue(const std::function<std::complex<double>(double)>& f,
                                     double density, double window_radius, int k,
                                     double abs_tol) {
  if (density <= 0.0 || window_radius <= 0.0) return 0.0;
  const double c = density;
  const double pic = std::numbers::pi * c;
  const double lgamma_k1 = std::lgamma(k + 1.0);
  auto integrand = [&](double r) -> std::complex<double> {
    const double u = pic * r * r;
    const double lw = log_mode_weight_u(k, u, lgamma_k1);
    const double w = 2.0 * pic * r * std::exp(lw);
    return w * f(r);
  };
  // The weight is a narrow bump around r = sqrt(k / (pi c)); restrict the
  // adaptive pass to where it is above 1e-18 of its peak so the subdivision
  // budget is spent on the support.
  const double u_center = std::max(1.0, static_cast<double>(k));
  const double u_half = 10.0 * std::sqrt(u_center) + 46.0;
  const double u_max = pic * window_radius * window_radius;
  const double u_lo = std::max(0.0, u_center - u_half);
  const double u_hi = std::min(u_max, u_center + u_half);
  if (u_lo >= u_max) return 0.0;
  const double r_lo = std::sqrt(u_lo / pic);
  const double r_hi = std::sqrt(u_hi / pic);
  return adaptive_gauss_legendre<std::complex<double>>(integrand, r_lo, r_hi,
                                                       abs_tol);
}

GinibreModeBasis::GinibreModeBasis(double density, double window_radius)
    : density_(density), radius_(window_radius) {
  if (density <= 0.0 || window_radius <= 0.0) {
    mass_ = 0.0;
    truncation_ = 0;
    row_offset_.assign(1, 0);
    return;
  }
  const double pic = std::numbers::pi * density;
  mass_ = pic * window_radius * window_radius;
  truncation_ = spectral_truncation(density, window_radius);

  // Quadrature grid in u = pi c r^2: log-free fixed panels, 24-point rule on
  // panels of width ~16 so the e^-u u^k bumps are resolved for every k.
  const int n_panels = std::max(6, static_cast<int>(std::ceil(mass_ / 16.0)));
  const GaussLegendreRule& rule = gauss_legendre(24);
  const size_t n_nodes = static_cast<size_t>(n_panels) * rule.nodes.size();
  std::vector<double> u_nodes(n_nodes);
  std::vector<double> u_weights(n_nodes);
  radii_.resize(n_nodes);
  for (int panel = 0; panel < n_panels; ++panel) {
    const double a = mass_ * panel / n_panels;
    const double b = mass_ * (panel + 1) / n_panels;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const size_t j = panel * rule.nodes.size() + i;
      u_nodes[j] = mid + half * rule.nodes[i];
      u_weights[j] = half * rule.weights[i];
      radii_[j] = std::sqrt(u_nodes[j] / pic);
    }
  }

  row_first_node_.resize(truncation_);
  row_offset_.resize(truncation_ + 1);
  weights_.reserve(n_nodes * 8);
  for (int k = 0; k < truncation_; ++k) {
    row_offset_[k] = weights_.size();
    const double half = 10.0 * std::sqrt(k + 1.0) + 46.0;
    const double u_lo = k - half;
    const double u_hi = k + half;
    auto first = std::lower_bound(u_nodes.begin(), u_nodes.end(), u_lo);
    auto last = std::upper_bound(u_nodes.begin(), u_nodes.end(), u_hi);
    row_first_node_[k] = static_cast<int>(first - u_nodes.begin());
    const double lgamma_k1 = std::lgamma(k + 1.0);
    for (auto it = first; it != last; ++it) {
      const size_t j = static_cast<size_t>(it - u_nodes.begin());
      const double w =
          u_weights[j] * std::exp(log_mode_weight_u(k, u_nodes[j], lgamma_k1));
      weights_.push_back(static_cast<float>(w));
    }
  }
  row_offset_[truncation_] = weights_.size();
}

void GinibreModeBasis::eigenvalues_from_nodes(const std::complex<double>* f,
                                              std::complex<double>* out) const {
  const size_t n = radii_.size();
  std::vector<float> re(n), im(n);
  for (size_t j = 0; j < n; ++j) {
    re[j] = static_cast<float>(f[j].real());
    im[j] = static_cast<float>(f[j].imag());
  }
  for (int k = 0; k < truncation_; ++k) {
    const size_t begin = row_offset_[k];
    const size_t count = row_offset_[k + 1] - begin;
    const float* w = weights_.data() + begin;
    const float* fr = re.data() + row_first_node_[k];
    const float* fi = im.data() + row_first_node_[k];
    double sr = 0.0, si = 0.0;
    for (size_t i = 0; i < count; ++i) {
      sr += static_cast<double>(w[i]) * fr[i];
      si += static_cast<double>(w[i]) * fi[i];
    }
    out[k] = {sr, si};
  }
}

void GinibreModeBasis::eigenvalues_from_nodes(const double* f, double* out) const {
  const size_t n = radii_.size();
  std::vector<float> fv(n);
  for (size_t j = 0; j < n; ++j) fv[j] = static_cast<float>(f[j]);
  for (int k = 0; k < truncation_; ++k) {
    const size_t begin = row_offset_[k];
    const size_t count = row_offset_[k + 1] - begin;
    const float* w = weights_.data() + begin;
    const float* x = fv.data() + row_first_node_[k];
    double s = 0.0;
    for (size_t i = 0; i < count; ++i) s += static_cast<double>(w[i]) * x[i];
    out[k] = s;
  }
}

double GinibreModeBasis::mode_upper_bound(int k) const {
  return reg_lower_gamma(k + 1.0, mass_);
}

double GinibreModeBasis::truncation_tail() const {
  double tail = 0.0;
  for (int k = truncation_; k < truncation_ + 2000; ++k) {
    const double q = reg_lower_gamma(k + 1.0, mass_);
    tail += q;
    if (q < 1e-25) break;
  }
  return tail;
}

}  // namespace d2d
