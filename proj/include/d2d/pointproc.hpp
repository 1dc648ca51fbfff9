#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "d2d/rng.hpp"

namespace d2d {

/// Distances from the window center of the active ambient transmitters.
/// Every functional of the link model depends on the ambient field only
/// through these radii, so patterns never carry angles. When 2D positions are
/// wanted for plotting, attach_uniform_angles() pairs the radii with
/// independent uniform angles; that is exact for radial functionals but not
/// for general angular statistics.
struct RadialPattern {
  std::vector<double> radii;  ///< each in (0, window_radius]
  double window_radius = 0.0;
  double density = 0.0;  ///< intended intensity, metadata only

  size_t size() const { return radii.size(); }
  bool empty() const { return radii.empty(); }
};

/// Truncation index for the Kostlan ladder: ceil(U + 10 sqrt(U) + 10) with
/// U = pi * density * R^2. Modes beyond it land inside the window with
/// probability < 1e-8 in total.
int kostlan_truncation(double density, double window_radius);

/// The squared moduli of a Ginibre field of the given intensity: independent
/// Gamma(k, 1/(pi*density)) draws for k = 1..count.
std::vector<double> kostlan_squared_moduli(double density, int count, RngStream& rng);

/// Ginibre pattern restricted to the disk, exact in distribution for the
/// modulus set up to the truncation tail.
RadialPattern sample_ginibre_radii(double density, double window_radius, RngStream rng);

/// Repulsion-damped field: a Ginibre pattern of the same intensity drawn on a
/// disk of radius R/sqrt(alpha), thinned with retention alpha, radii scaled
/// by sqrt(alpha). Gamma draws and thinning use separate substreams.
RadialPattern sample_alpha_gpp_radii(double density, double alpha,
                                     double window_radius, RngStream rng);

/// Poisson field: count ~ Poisson(density*pi*R^2), radial CDF (r/R)^2.
RadialPattern sample_ppp_radii(double density, double window_radius, RngStream rng);

/// Independent thinning with retention probability p.
RadialPattern thin(const RadialPattern& pattern, double p, RngStream rng);

/// CSV dump, columns "k,radius_m".
void write_pattern_csv(std::ostream& out, const RadialPattern& pattern);

/// Debug/visualization positions; see the RadialPattern note.
std::vector<std::pair<double, double>> attach_uniform_angles(const RadialPattern& pattern,
                                                             RngStream rng);

}  // namespace d2d
