#pragma once

#include <cstdint>
#include <random>

namespace doorsim {

// Deterministic random source. Gaussian draws use a cache-free Box-Muller
// so the draw sequence is stable regardless of call pattern.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : engine_(seed) {}

  // Derives an independent stream (per subsystem) from one master seed.
  static Rng stream(uint64_t seed, uint64_t stream_id);

  double uniform();                          // [0, 1)
  double uniform(double lo, double hi);      // [lo, hi)
  int uniform_int(int lo, int hi);           // inclusive bounds
  double gaussian(double mean = 0.0, double stddev = 1.0);
  uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace doorsim
