#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "d2d/special.hpp"

namespace d2d {

/// Truncated mode spectrum of a radially modulated Ginibre kernel
/// sqrt(f) G sqrt(f). The kernel is diagonal over angular modes, and mode k
/// carries the single eigenvalue
///   lambda_k = integral_0^R f(r) w_k(r) dr,
///   w_k(r) = 2 pi r c (pi c)^k r^(2k) exp(-pi c r^2) / k!,
/// with c the kernel density. For real f in [0,1] every lambda_k lies in
/// [0, q_k], q_k = P(k+1, pi c R^2).
struct SpectralOperator {
  std::vector<std::complex<double>> eigenvalues;  ///< modes k = 0..K-1
  double density = 0.0;
  double window_radius = 0.0;
  int truncation = 0;
};

/// The literal product  prod_k (1 + alpha * lambda_k)^(-1/alpha)  with the
/// principal logarithm. `alpha` is a signed parameter: Laplace functionals of
/// the repulsive fields evaluate it at the negated repulsion factor (see the
/// analytic layer). Throws EvaluationError when alpha is 0 or any factor
/// |1 + alpha*lambda_k| < 1e-12.
std::complex<double> fredholm_det_alpha(std::span<const std::complex<double>> eigenvalues,
                                        double alpha);
std::complex<double> fredholm_det_alpha(const SpectralOperator& op, double alpha);

/// Single mode eigenvalue by adaptive Gauss-Legendre in r, absolute
/// tolerance `abs_tol`. Throws QuadratureError (with the achieved error) on
/// non-convergence.
std::complex<double> mode_eigenvalue(const std::function<std::complex<double>(double)>& f,
                                     double density, double window_radius, int k,
                                     double abs_tol = 1e-12);

/// Truncation used by the spectral pipeline:
/// ceil(U) + ceil(10 sqrt(U)) + 16, U = pi * density * R^2.
int spectral_truncation(double density, double window_radius);

/// Shared quadrature table for all modes of one (density, R) kernel. Rows
/// hold the mode weight densities pre-multiplied by the quadrature weights,
/// windowed to where they are non-negligible, so a full eigenvalue sweep is
/// one pass over f at the node radii.
class GinibreModeBasis {
 public:
  GinibreModeBasis(double density, double window_radius);

  double density() const { return density_; }
  double window_radius() const { return radius_; }
  double window_mass() const { return mass_; }  ///< U = pi c R^2
  int truncation() const { return truncation_; }

  const std::vector<double>& node_radii() const { return radii_; }

  /// out[k] = sum over nodes of row_k * f(node); f sampled at node_radii().
  void eigenvalues_from_nodes(const std::complex<double>* f,
                              std::complex<double>* out) const;
  void eigenvalues_from_nodes(const double* f, double* out) const;

  template <class F>
  SpectralOperator spectral_operator(F&& f) const {
    const size_t n = radii_.size();
    std::vector<std::complex<double>> fv(n);
    for (size_t j = 0; j < n; ++j) fv[j] = f(radii_[j]);
    SpectralOperator op;
    op.eigenvalues.resize(truncation_);
    eigenvalues_from_nodes(fv.data(), op.eigenvalues.data());
    op.density = density_;
    op.window_radius = radius_;
    op.truncation = truncation_;
    return op;
  }

  /// q_k = P(k+1, U), the eigenvalue bound for f in [0,1].
  double mode_upper_bound(int k) const;
  /// Bound on sum_{k >= K} q_k, the spectrum mass dropped by truncation.
  double truncation_tail() const;

 private:
  double density_ = 0.0;
  double radius_ = 0.0;
  double mass_ = 0.0;
  int truncation_ = 0;
  std::vector<double> radii_;
  std::vector<int> row_first_node_;
  std::vector<size_t> row_offset_;  // truncation_+1 entries
  std::vector<float> weights_;      // mode weight * quadrature weight
};

template <class F>
SpectralOperator make_spectral_operator(F&& f, double density, double window_radius) {
  return GinibreModeBasis(density, window_radius).spectral_operator(f);
}

}  // namespace d2d
