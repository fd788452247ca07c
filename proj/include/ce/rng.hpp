#pragma once

#include <cstdint>

namespace ce {

// Deterministic, platform-independent RNG. Each Monte Carlo shot gets its own
// stream keyed by (seed, point index, trial index), so results are identical
// regardless of how trials are distributed over threads.

struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static uint64_t rotl(uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }
  uint64_t s_[4];
};

inline Xoshiro256pp shot_rng(uint64_t seed, uint64_t point_index,
                             uint64_t trial_index) {
  SplitMix64 key(seed);
  uint64_t mixed = key.next();
  mixed ^= SplitMix64(point_index * 0xA24BAED4963EE407ULL + 1).next();
  mixed ^= SplitMix64(trial_index * 0x9FB21C651E98DF25ULL + 2).next();
  return Xoshiro256pp(mixed);
}

}  // namespace ce
