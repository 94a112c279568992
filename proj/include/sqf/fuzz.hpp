// Seeded samplers for the identity fuzz: shifts a <= 1e6, gaps b <= 1e3,
// centers m, n up to ~1e9 subject to the construction bounds. One splitmix64
// stream drives everything so runs replay bit-for-bit from the seed.
#pragma once

#include "sqf/rng.hpp"
#include "sqf/shifts.hpp"

namespace sqf::fuzz {

inline shifts::ShiftPair random_shift_pair(Rng& rng, shifts::Direction dir) {
  u64 a = 1 + rng.below(1000000);
  u64 b = 1 + rng.below(1000);
  u64 m = 2 * a + 1 + rng.below(1000000000);
  u64 n = 2 * b + 1 + rng.below(1000000000);
  return shifts::ShiftPair::make(m, n, a, b, dir);
}

inline shifts::Quadruple random_quadruple(Rng& rng) {
  i64 a1 = static_cast<i64>(1 + rng.below(1000000));
  i64 a2 = static_cast<i64>(1 + rng.below(1000000));
  i64 a3 = static_cast<i64>(1 + rng.below(1000000));
  u64 b1 = 1 + rng.below(1000);
  u64 b2 = 1 + rng.below(1000);
  u64 b3 = 1 + rng.below(1000);
  u64 m = 2 * static_cast<u64>(a1 + a2 + a3) + 1 + rng.below(1000000000);
  u64 n = 2 * (b1 + b2 + b3) + 1 + rng.below(1000000000);
  return shifts::Quadruple::make(m, n, a1, b1, a2, b2, a3, b3);
}

}  // namespace sqf::fuzz
