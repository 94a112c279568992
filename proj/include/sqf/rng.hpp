// Deterministic 64-bit generator used for all seeded sampling. splitmix64
// (Steele/Lea/Vigna): state += 0x9e3779b97f4a7c15; z = state; z = (z ^ z>>30)
// * 0xbf58476d1ce4e5b9; z = (z ^ z>>27) * 0x94d049bb133111eb; return z ^ z>>31.
// The algorithm is spelled out so sampled cases replay in any implementation.
#pragma once

#include "sqf/numeric.hpp"

namespace sqf {

class Rng {
 public:
  explicit Rng(u64 seed) : state_(seed) {}

  u64 next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    u64 z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); modulo reduction, bias negligible for n << 2^64.
  u64 below(u64 n) { return n == 0 ? 0 : next() % n; }

  // Uniform-ish value in [lo, hi] inclusive.
  u64 range(u64 lo, u64 hi) { return lo + below(hi - lo + 1); }

 private:
  u64 state_;
};

}  // namespace sqf
