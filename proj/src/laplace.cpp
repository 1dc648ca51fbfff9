#include "d2d/laplace.hpp"

#include <cmath>
#include <numbers>

#include "d2d/errors.hpp"
#include "d2d/special.hpp"

namespace d2d {

std::vector<std::complex<double>> euler_nodes(double t,
                                              const InverseLaplaceConfig& cfg) {
  const int n = cfg.terms + cfg.euler_depth;
  std::vector<std::complex<double>> nodes(n + 1);
  const double re = cfg.discretization / (2.0 * t);
  const double im_step = std::numbers::pi / t;
  for (int j = 0; j <= n; ++j) {
    nodes[j] = {re, j * im_step};
  }
  return nodes;
}

double euler_combine(std::span<const std::complex<double>> transform_values,
                     double t, const InverseLaplaceConfig& cfg,
                     InversionDiagnostics* diag) {
  const int m = cfg.terms;
  const int depth = cfg.euler_depth;
  if (m < 8) throw InversionError("inverse_laplace: terms must be >= 8");
  if (depth < 1 || static_cast<int>(transform_values.size()) != m + depth + 1) {
    throw InversionError("inverse_laplace: transform value count mismatch");
  }

  const double prefactor = std::exp(0.5 * cfg.discretization) / t;
  std::vector<double> partial(m + depth + 1);
  double running = 0.5 * transform_values[0].real();
  partial[0] = prefactor * running;
  double sign = -1.0;
  for (int j = 1; j <= m + depth; ++j) {
    running += sign * transform_values[j].real();
    partial[j] = prefactor * running;
    sign = -sign;
  }

  const std::vector<double> binom = binomial_row(depth);
  const double scale = std::ldexp(1.0, -depth);
  double averaged = 0.0;
  double averaged_prev = 0.0;  // depth-1 average over partial[m..m+depth-1]
  if (depth >= 2) {
    const std::vector<double> binom_prev = binomial_row(depth - 1);
    const double scale_prev = std::ldexp(1.0, -(depth - 1));
    for (int i = 0; i < depth; ++i) {
      averaged_prev += binom_prev[i] * scale_prev * partial[m + i];
    }
  }
  for (int i = 0; i <= depth; ++i) {
    averaged += binom[i] * scale * partial[m + i];
  }

  const double increment = std::abs(averaged - averaged_prev);
  if (diag) {
    diag->euler_increment = increment;
    diag->converged = true;
  }
  const double scale_ref =
      std::max({std::abs(averaged), std::abs(partial[m]), 1e-300});
  if (depth >= 2 && increment > 0.02 * scale_ref) {
    if (diag) diag->converged = false;
    throw InversionError(
        "inverse_laplace: Euler averages oscillate (increment " +
        std::to_string(increment) + " vs scale " + std::to_string(scale_ref) +
        "); transform may be unsuitable at t = " + std::to_string(t));
  }
  return averaged;
}

double inverse_laplace(const std::function<std::complex<double>(std::complex<double>)>& transform,
                       double t, const InverseLaplaceConfig& cfg,
                       InversionDiagnostics* diag) {
  if (!(t > 0.0)) throw InversionError("inverse_laplace: t must be > 0");
  const std::vector<std::complex<double>> nodes = euler_nodes(t, cfg);
  std::vector<std::complex<double>> values(nodes.size());
  for (size_t j = 0; j < nodes.size(); ++j) values[j] = transform(nodes[j]);
  return euler_combine(values, t, cfg, diag);
}

}  // namespace d2d
