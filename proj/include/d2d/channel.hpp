#pragma once

#include <vector>

#include "d2d/rng.hpp"

namespace d2d {

/// Power gains, one per ambient transmitter, block-constant over a slot.
using GainVector = std::vector<double>;

/// i.i.d. Nakagami-m fading as power gains: Gamma(m, 1/m), unit mean.
GainVector sample_nakagami_power(double m, size_t n, RngStream& rng);

/// Rayleigh fading as a power gain: Exp(1).
double sample_rayleigh_power(RngStream& rng);

}  // namespace d2d
