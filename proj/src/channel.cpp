#include "d2d/channel.hpp"

namespace d2d {

GainVector sample_nakagami_power(double m, size_t n, RngStream& rng) {
  GainVector gains(n);
  const double scale = 1.0 / m;
  for (size_t i = 0; i < n; ++i) {
    gains[i] = rng.gamma(m, scale);
  }
  return gains;
}

double sample_rayleigh_power(RngStream& rng) { return rng.exponential(); }

}  // namespace d2d
