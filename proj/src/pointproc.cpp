#include "d2d/pointproc.hpp"

#include <cmath>
#include <numbers>

namespace d2d {

namespace {
constexpr uint64_t kTagGamma = 0;
constexpr uint64_t kTagAlphaThin = 1;
}  // namespace

int kostlan_truncation(double density, double window_radius) {
  const double u = std::numbers::pi * density * window_radius * window_radius;
  return static_cast<int>(std::ceil(u + 10.0 * std::sqrt(u) + 10.0));
}

std::vector<double> kostlan_squared_moduli(double density, int count, RngStream& rng) {
  std::vector<double> out(count);
  const double scale = 1.0 / (std::numbers::pi * density);
  for (int k = 1; k <= count; ++k) {
    out[k - 1] = rng.gamma(static_cast<double>(k), scale);
  }
  return out;
}

RadialPattern sample_ginibre_radii(double density, double window_radius, RngStream rng) {
  RadialPattern pattern;
  pattern.window_radius = window_radius;
  pattern.density = density;
  if (density <= 0.0 || window_radius <= 0.0) return pattern;

  const int count = kostlan_truncation(density, window_radius);
  const double r2_max = window_radius * window_radius;
  const double scale = 1.0 / (std::numbers::pi * density);
  pattern.radii.reserve(static_cast<size_t>(density * std::numbers::pi * r2_max * 1.1) + 8);
  for (int k = 1; k <= count; ++k) {
    const double g = rng.gamma(static_cast<double>(k), scale);
    if (g <= r2_max) pattern.radii.push_back(std::sqrt(g));
  }
  return pattern;
}

RadialPattern sample_alpha_gpp_radii(double density, double alpha,
                                     double window_radius, RngStream rng) {
  RadialPattern pattern;
  pattern.window_radius = window_radius;
  pattern.density = density;
  if (density <= 0.0 || window_radius <= 0.0) return pattern;

  const double sqrt_alpha = std::sqrt(alpha);
  const double base_radius = window_radius / sqrt_alpha;
  RngStream gamma_rng = rng.substream(kTagGamma);
  RngStream thin_rng = rng.substream(kTagAlphaThin);

  const int count = kostlan_truncation(density, base_radius);
  const double base_r2_max = base_radius * base_radius;
  const double scale = 1.0 / (std::numbers::pi * density);
  pattern.radii.reserve(
      static_cast<size_t>(density * std::numbers::pi * window_radius * window_radius * 1.1) + 8);
  for (int k = 1; k <= count; ++k) {
    const double g = gamma_rng.gamma(static_cast<double>(k), scale);
    const bool keep = thin_rng.bernoulli(alpha);
    if (keep && g <= base_r2_max) {
      pattern.radii.push_back(std::sqrt(g) * sqrt_alpha);
    }
  }
  return pattern;
}

RadialPattern sample_ppp_radii(double density, double window_radius, RngStream rng) {
  RadialPattern pattern;
  pattern.window_radius = window_radius;
  pattern.density = density;
  if (density <= 0.0 || window_radius <= 0.0) return pattern;

  const double mean = density * std::numbers::pi * window_radius * window_radius;
  const uint64_t n = rng.poisson(mean);
  pattern.radii.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    pattern.radii.push_back(window_radius * std::sqrt(rng.uniform()));
  }
  return pattern;
}

RadialPattern thin(const RadialPattern& pattern, double p, RngStream rng) {
  RadialPattern out;
  out.window_radius = pattern.window_radius;
  out.density = pattern.density * p;
  if (p <= 0.0) return out;
  if (p >= 1.0) {
    out.radii = pattern.radii;
    out.density = pattern.density;
    return out;
  }
  out.radii.reserve(pattern.radii.size());
  for (double r : pattern.radii) {
    if (rng.bernoulli(p)) out.radii.push_back(r);
  }
  return out;
}

void write_pattern_csv(std::ostream& out, const RadialPattern& pattern) {
  out << "k,radius_m\n";
  for (size_t i = 0; i < pattern.radii.size(); ++i) {
    out << i << ',' << pattern.radii[i] << '\n';
  }
}

std::vector<std::pair<double, double>> attach_uniform_angles(const RadialPattern& pattern,
                                                             RngStream rng) {
  std::vector<std::pair<double, double>> xy;
  xy.reserve(pattern.radii.size());
  for (double r : pattern.radii) {
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    xy.emplace_back(r * std::cos(theta), r * std::sin(theta));
  }
  return xy;
}

}  // namespace d2d
