#include "d2d/rng.hpp"

#include <cmath>

namespace d2d {

namespace {
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr uint64_t kMult = 6364136223846793005ULL;

uint64_t mix_key(uint64_t key, uint64_t word) {
  return splitmix64(key ^ (word * kGolden + 0x2545F4914F6CDD1DULL));
}
}  // namespace

uint64_t splitmix64(uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(uint64_t key) : key_(key) {
  // pcg32 srandom: state seeded after the increment is fixed.
  inc_ = (splitmix64(key ^ 0xDA3E39CB94B95BDBULL) << 1u) | 1u;
  state_ = 0u;
  next_u32();
  state_ += splitmix64(key);
  next_u32();
}

RngStream::RngStream(uint64_t master_seed, uint64_t stream_id)
    : RngStream(mix_key(master_seed, stream_id)) {}

RngStream RngStream::substream(uint64_t tag) const {
  return RngStream(mix_key(key_, tag ^ 0xA5A5A5A5A5A5A5A5ULL));
}

uint32_t RngStream::next_u32() {
  const uint64_t old = state_;
  state_ = old * kMult + inc_;
  const uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
  const uint32_t rot = static_cast<uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

uint64_t RngStream::next_u64() {
  const uint64_t hi = next_u32();
  const uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() { return 1.0 - uniform(); }

double RngStream::exponential() { return -std::log(uniform_pos()); }

double RngStream::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * factor;
  has_spare_normal_ = true;
  return u * factor;
}

double RngStream::gamma(double shape, double scale) {
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a+1) * U^(1/a).
    const double g = gamma(shape + 1.0, 1.0);
    return scale * g * std::pow(uniform_pos(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_pos();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

uint64_t RngStream::poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  // Split large means; the sum of independent Poisson halves is exact and the
  // multiplication method below stays clear of exp underflow.
  if (mean > 30.0) {
    const double half = 0.5 * mean;
    const uint64_t a = poisson(half);
    return a + poisson(mean - half);
  }
  const double l = std::exp(-mean);
  uint64_t k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= uniform();
  } while (p > l);
  return k - 1;
}

bool RngStream::bernoulli(double p) { return uniform() < p; }

}  // namespace d2d
