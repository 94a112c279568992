// Segmented squarefree sieve: membership tests, counts, successor queries
// and maximal-gap record scans. All quantities are 128-bit unsigned so that
// bounds like m*n^2 never overflow at desk scale.
#pragma once

#include "sqf/numeric.hpp"

#include <functional>
#include <vector>

namespace sqf::sieve {

inline constexpr u64 kDefaultBlockSize = u64{1} << 20;

struct SieveSegment {
  u128 lo = 0;  // inclusive
  u128 hi = 0;  // exclusive
  std::vector<bool> flags;  // flags[i] <=> lo+i squarefree
};

struct GapRecord {
  u128 start = 0;  // squarefree; the next squarefree number is start+gap
  u64 gap = 0;
};

inline bool operator==(const GapRecord& a, const GapRecord& b) {
  return a.start == b.start && a.gap == b.gap;
}

// Cached odd-Eratosthenes prime table, grown monotonically. Read-only while
// scans are running; scans extend it once up front.
const std::vector<u64>& primes_upto(u64 limit);

bool is_squarefree(u128 n);  // n >= 1

// Half-open segment [lo, hi); hi-lo must not exceed block_size.
SieveSegment sieve_segment(u128 lo, u128 hi, u64 block_size = kDefaultBlockSize);

u128 count_squarefree_upto(u128 x, unsigned threads = 1);

u128 next_squarefree(u128 x);

using ProgressFn = std::function<void(u128 done, u128 total)>;

// Record-setting gaps between consecutive squarefree numbers s < s' <= limit,
// streamed segment by segment; deterministic for any thread count.
std::vector<GapRecord> max_gap_scan(u128 limit, unsigned threads = 1,
                                    const ProgressFn& progress = nullptr);

}  // namespace sqf::sieve
