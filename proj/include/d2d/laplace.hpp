#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace d2d {

/// Bromwich inversion, Euler-summation flavor: nodes on the vertical line
/// Re s = A/(2t) at imaginary spacing pi/t, alternating partial sums, then a
/// binomial average of the last `euler_depth`+1 of them. All nodes keep a
/// positive real part, so transforms defined off the negative axis are safe.
struct InverseLaplaceConfig {
  int terms = 32;                ///< partial sums before averaging (M >= 8)
  double discretization = 18.4;  ///< contour parameter A; error ~ e^-A
  int euler_depth = 32;          ///< binomial averaging depth
};

struct InversionDiagnostics {
  double euler_increment = 0.0;  ///< change from deepening the average by one
  bool converged = true;
};

/// The transform evaluation points for one inversion of f at t:
/// s_j = (A + 2 pi i j) / (2t), j = 0 .. terms + euler_depth.
std::vector<std::complex<double>> euler_nodes(double t,
                                              const InverseLaplaceConfig& cfg);

/// Combines F(s_j) values (in node order) into f(t). Throws InversionError
/// when the averaged partial sums oscillate instead of settling.
double euler_combine(std::span<const std::complex<double>> transform_values,
                     double t, const InverseLaplaceConfig& cfg,
                     InversionDiagnostics* diag = nullptr);

double inverse_laplace(const std::function<std::complex<double>(std::complex<double>)>& transform,
                       double t, const InverseLaplaceConfig& cfg = {},
                       InversionDiagnostics* diag = nullptr);

}  // namespace d2d
