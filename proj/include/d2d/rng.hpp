#pragma once

#include <cstdint>

namespace d2d {

uint64_t splitmix64(uint64_t x);

/// Counter-based random stream: a PCG32 engine whose state and sequence are
/// derived from a 64-bit key. Streams for (master_seed, stream_id) pairs are
/// statistically independent, so trial i can always be given stream id i and
/// the schedule of workers never matters.
///
/// Substream split: stream id = trial_index * kStreamsPerTrial + tag, and any
/// stream can fork a child with substream(tag). Both derivations go through
/// splitmix64, so the tree is reproducible from the master seed alone.
class RngStream {
 public:
  RngStream() : RngStream(0) {}
  explicit RngStream(uint64_t key);
  RngStream(uint64_t master_seed, uint64_t stream_id);

  RngStream substream(uint64_t tag) const;

  uint32_t next_u32();
  uint64_t next_u64();

  double uniform();      // [0, 1), 53-bit resolution
  double uniform_pos();  // (0, 1]
  double exponential();  // rate 1
  double normal();       // standard normal, polar method
  /// Gamma(shape, scale), shape > 0 (Marsaglia-Tsang, with the U^(1/a)
  /// boost for shape < 1).
  double gamma(double shape, double scale);
  uint64_t poisson(double mean);
  bool bernoulli(double p);

 private:
  uint64_t state_;
  uint64_t inc_;
  uint64_t key_;
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

}  // namespace d2d
