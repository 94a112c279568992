// Brute-force oracles used to freeze expected values. Deliberately naive and
// independent of the library implementations: plain trial division, direct
// double loops, no segment/striking logic.
#pragma once

#include "sqf/census.hpp"
#include "sqf/sieve.hpp"

#include <vector>

namespace oracle {

using sqf::u64;
using sqf::u128;

inline bool is_squarefree(u64 n) {
  for (u64 d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

inline u64 count_upto(u64 x) {
  u64 c = 0;
  for (u64 n = 1; n <= x; ++n) c += is_squarefree(n);
  return c;
}

inline u64 next_squarefree(u64 x) {
  u64 n = x + 1;
  while (!is_squarefree(n)) ++n;
  return n;
}

inline std::vector<sqf::sieve::GapRecord> gap_records(u64 limit) {
  std::vector<sqf::sieve::GapRecord> recs;
  u64 best = 0, prev = 0;
  for (u64 n = 1; n <= limit; ++n) {
    if (!is_squarefree(n)) continue;
    if (prev != 0 && n - prev > best) {
      best = n - prev;
      recs.push_back({prev, best});
    }
    prev = n;
  }
  return recs;
}

// Window membership by direct product scan over candidate witnesses.
inline std::vector<sqf::census::Member> members(u64 x, u64 h, u64 lo, u64 hi) {
  std::vector<sqf::census::Member> out;
  for (u64 n = lo + 1; n <= hi; ++n) {
    u128 n2 = static_cast<u128>(n) * n;
    u64 m_lo = n2 > x ? 1 : static_cast<u64>(x / n2);
    for (u64 m = m_lo; ; ++m) {
      u128 prod = m * n2;
      if (prod > static_cast<u128>(x) + h) break;
      if (prod > x) {
        out.push_back({n, m});
        break;  // smallest witness; membership only needs existence
      }
    }
  }
  return out;
}

inline std::map<u64, u64> gap_multiset(const std::vector<sqf::census::Member>& ms) {
  std::map<u64, u64> gaps;
  for (size_t i = 1; i < ms.size(); ++i) ++gaps[ms[i].n - ms[i - 1].n];
  return gaps;
}

}  // namespace oracle
