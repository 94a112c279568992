// Enumeration of the counting sets: the window membership sets S(t1,t2],
// their consecutive-gap multisets t(b), the four-range prime decomposition
// of the non-squarefree count, the three-in-a-row spacing check and the
// gap-tail prebound bookkeeping.
#pragma once

#include "sqf/params.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sqf::census {

struct Member {
  u64 n = 0;
  u64 m = 0;  // witness: m*n^2 in (x, x+h]
};

inline bool operator==(const Member& a, const Member& b) { return a.n == b.n && a.m == b.m; }

struct WindowCensus {
  u64 x = 0;
  u64 h = 0;
  u64 N = 0;          // window is (N, window_hi]
  u64 window_hi = 0;  // floor(lambda*N) unless built from an explicit range
  u32 L = 0;
  std::vector<Member> members;
  std::map<u64, u64> gaps;  // b -> t(b), consecutive-member distances

  Rat M() const { return Rat(Int(x), Int(N) * N); }  // typical witness size x/N^2
};

// Number of multiples of n^2 in (x, x+h], exact; n >= 2.
u64 multiples_in_interval(u64 n, const GlobalParams& params);

// Members of (N, floor(lambda*N)] with their unique witnesses; requires N > h.
WindowCensus census(u64 N, const GlobalParams& params);

// Same enumeration over an explicit half-open range (lo, hi].
WindowCensus census_range(u64 lo, u64 hi, const GlobalParams& params);

// Lambda-adic window endpoints N_k = ceil(N0 * lambda^k) clipped to hi;
// consecutive pairs are the half-open windows (N_k, N_{k+1}].
std::vector<u64> window_endpoints(u64 lo, u64 hi, u32 L);

// Exact comparison b > c0 * N^{4/3} / x^{1/3}  <=>  b^3 x c0d^3 > c0n^3 N^4.
bool gap_exceeds_radius(u64 b, u64 N, u64 x, const Rat& c0);

struct DecompositionReport {
  u64 S1 = 0, S2 = 0, S3 = 0, S4 = 0;
  u64 total_nonsquarefree = 0;  // in (x, x+h], by direct sieve
  // Effective range tops after monotone clamping; degenerate ranges are empty.
  u64 t1 = 0, t2 = 0, t3 = 0, t4 = 0;
  u64 sum() const { return S1 + S2 + S3 + S4; }
};

// Sum of M_p over primes in the four ranges (h, c h^{5/2}/x^{1/4},
// x^{2/3} log^2 x / h^{5/3}, 2 sqrt(x)); c in (0,1).
DecompositionReport decompose(const GlobalParams& params, const Rat& c);

struct TripleViolation {
  u64 n1 = 0, n2 = 0, n3 = 0;
  u64 span = 0;  // n3 - n1
};

struct SpacingReport {
  std::vector<TripleViolation> violations;  // consecutive triples with span <= radius
  u64 triple_count = 0;
  // min over consecutive triples of (span / (N^{4/3}/x^{1/3}))^3, exact.
  std::optional<Rat> min_span_normalized_cubed;
  std::optional<Rat> min_span_normalized;  // cube root, 6-decimal approximation
};

SpacingReport spacing_check(const WindowCensus& census, const Rat& c0);

struct PreboundReport {
  u64 member_count = 0;
  u64 sum_t_all = 0;    // = max(0, member_count - 1)
  u64 sum_t_gt_R = 0;   // gaps beyond the spacing radius
  u64 sum_t_le_R = 0;
  u64 capped_sum = 0;   // R < b <= B
  double B = 0.0;       // N log^1.2 x / h
  Rat tail = 0;         // h / (L log^1.2 x), decimal approximation
  u64 pair_bound_rhs = 0;  // 2 + 2*sum_t_gt_R
  bool bound_holds = false;  // member_count <= pair_bound_rhs
};

PreboundReport prebound_terms(const WindowCensus& census, const GlobalParams& params);

}  // namespace sqf::census
