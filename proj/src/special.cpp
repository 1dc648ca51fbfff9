#include "d2d/special.hpp"

#include <map>
#include <mutex>
#include <numbers>

namespace d2d {

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gammp_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 10000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction of Q(a, x), valid for x >= a + 1 (Lentz).
double gammq_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double reg_lower_gamma(double a, double x) {
  if (x <= 0.0) return 0.0;
  if (a <= 0.0) return 1.0;
  if (x < a + 1.0) return gammp_series(a, x);
  return 1.0 - gammq_cf(a, x);
}

const GaussLegendreRule& gauss_legendre(int order) {
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[order - 1 - i] = rule.weights[i];
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

std::vector<double> geomspace(double a, double b, int n_panels) {
  std::vector<double> edges(n_panels + 1);
  const double la = std::log(a);
  const double lb = std::log(b);
  for (int i = 0; i <= n_panels; ++i) {
    edges[i] = std::exp(la + (lb - la) * i / n_panels);
  }
  edges.front() = a;
  edges.back() = b;
  return edges;
}

std::vector<double> binomial_row(int n) {
  std::vector<double> row(n + 1, 1.0);
  for (int i = 1; i <= n; ++i) {
    row[i] = row[i - 1] * (n - i + 1) / i;
  }
  return row;
}

}  // namespace d2d
