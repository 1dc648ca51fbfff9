#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "d2d/errors.hpp"

namespace d2d {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double reg_lower_gamma(double a, double x);

// Gauss-Legendre rule on [-1, 1]; nodes ascending. Cached per order.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int order);

// n+1 logarithmically spaced edges covering [a, b], a > 0.
std::vector<double> geomspace(double a, double b, int n_panels);

// Row of binomial coefficients C(n, 0..n) in doubles (n <= 64).
std::vector<double> binomial_row(int n);

namespace detail {

template <class T, class F>
T gl_panel(F&& f, double a, double b, const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T acc{};
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += T(rule.weights[i] * half) * f(mid + half * rule.nodes[i]);
  }
  return acc;
}

template <class T, class F>
void adaptive_gl_recurse(F&& f, double a, double b, double tol, int depth,
                         const GaussLegendreRule& rule, T& total, double& err_acc) {
  const double mid = 0.5 * (a + b);
  const T whole = gl_panel<T>(f, a, b, rule);
  const T left = gl_panel<T>(f, a, mid, rule);
  const T right = gl_panel<T>(f, mid, b, rule);
  const double err = std::abs(whole - (left + right));
  if (err <= tol || depth <= 0) {
    total += left + right;
    err_acc += err;
    return;
  }
  adaptive_gl_recurse(f, a, mid, 0.5 * tol, depth - 1, rule, total, err_acc);
  adaptive_gl_recurse(f, mid, b, 0.5 * tol, depth - 1, rule, total, err_acc);
}

}  // namespace detail

// Adaptive Gauss-Legendre on [a, b] to absolute tolerance `tol`.
// Throws QuadratureError when the refinement depth is exhausted before the
// error estimate drops below tolerance.
template <class T, class F>
T adaptive_gauss_legendre(F&& f, double a, double b, double tol,
                          int max_depth = 40, double* achieved = nullptr) {
  const GaussLegendreRule& rule = gauss_legendre(15);
  T total{};
  double err_acc = 0.0;
  detail::adaptive_gl_recurse(f, a, b, tol, max_depth, rule, total, err_acc);
  if (achieved) *achieved = err_acc;
  if (!(err_acc <= 10.0 * tol)) {
    throw QuadratureError("adaptive quadrature did not converge, achieved error " +
                              std::to_string(err_acc),
                          err_acc);
  }
  return total;
}

}  // namespace d2d
