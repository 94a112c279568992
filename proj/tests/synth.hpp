// Constructed witnessed samples: shifts are chosen as the nearest integers
// aligning the companion products with m n^2, and (x, h] is taken as the
// tightest interval containing every product. The results are genuine
// members of (x, x+h] at any chosen scale.
#pragma once

#include "sqf/shifts.hpp"

#include <algorithm>
#include <optional>

namespace synth {

using sqf::Int;
using sqf::i64;
using sqf::u64;
namespace shifts = sqf::shifts;

struct WitnessedPair {
  shifts::ShiftPair pair;
  u64 x = 0;
  u64 h = 0;
};

inline i64 round_div(const Int& num, const Int& den) {
  Int q = (2 * num + den) / (2 * den);
  return q.convert_to<i64>();
}

inline std::optional<WitnessedPair> forward_pair(u64 m, u64 n, u64 b) {
  Int M(m), N(n), B(b);
  i64 a = round_div(M * (2 * N * B + B * B), (N + B) * (N + B));
  if (a < 1 || 2 * static_cast<u64>(a) >= m || 2 * b >= n) return std::nullopt;
  auto pair = shifts::ShiftPair::make(m, n, static_cast<u64>(a), b, shifts::Direction::forward);
  Int p1 = M * N * N, p2 = p1 + pair.d;
  Int lo = std::min(p1, p2), hi = std::max(p1, p2);
  WitnessedPair wp{pair, (lo - 1).convert_to<u64>(), (hi - lo + 1).convert_to<u64>()};
  return wp;
}

inline std::optional<WitnessedPair> backward_pair(u64 m, u64 n, u64 b) {
  Int M(m), N(n), B(b);
  i64 a = round_div(M * (2 * N * B - B * B), (N - B) * (N - B));
  if (a < 1 || 2 * static_cast<u64>(a) >= m || 2 * b >= n) return std::nullopt;
  auto pair = shifts::ShiftPair::make(m, n, static_cast<u64>(a), b, shifts::Direction::backward);
  Int p1 = M * N * N, p2 = p1 + pair.d;
  Int lo = std::min(p1, p2), hi = std::max(p1, p2);
  WitnessedPair wp{pair, (lo - 1).convert_to<u64>(), (hi - lo + 1).convert_to<u64>()};
  return wp;
}

inline std::optional<shifts::Quadruple> quadruple(u64 m, u64 n, u64 b1, u64 b2, u64 b3) {
  Int M(m), N(n);
  i64 a1 = round_div(M * (2 * N * Int(b1) - Int(b1) * b1), (N - b1) * (N - b1));
  i64 a2 = round_div(M * (2 * N * Int(b2) + Int(b2) * b2), (N + b2) * (N + b2));
  Int b23 = Int(b2) + b3;
  i64 a23 = round_div(M * (2 * N * b23 + b23 * b23), (N + b23) * (N + b23));
  i64 a3 = a23 - a2;
  if (a1 < 1 || a2 < 1 || a3 < 1) return std::nullopt;
  if (Int(a1) + a2 + a3 >= M) return std::nullopt;
  shifts::Quadruple q =
      shifts::Quadruple::make(m, n, a1, b1, a2, b2, a3, b3, /*x=*/0, /*h=*/0, false);
  auto prods = q.products();
  Int lo = *std::min_element(prods.begin(), prods.end());
  Int hi = *std::max_element(prods.begin(), prods.end());
  q.x = (lo - 1).convert_to<u64>();
  q.h = (hi - lo + 1).convert_to<u64>();
  q.witnessed = true;
  return q;
}

}  // namespace synth
