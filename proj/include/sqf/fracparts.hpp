// Counting n in (N, 2N] with ||x/n^2|| below a threshold and comparing the
// exact count against the three-term divided-difference bound (r = 4 by
// default), plus the dyadic-block sum over the small-n range.
#pragma once

#include "sqf/params.hpp"

#include <vector>

namespace sqf::fracparts {

struct FracCountInstance {
  u64 x = 0;
  u64 N = 0;
  Rat delta_fp = 0;  // threshold, 0 < delta_fp < 1/2
  int r = 4;

  Rat T() const { return Rat(Int(x), Int(N) * N); }

  static FracCountInstance make(u64 x, u64 N, const Rat& delta_fp, int r = 4);
};

// |{n in (N, 2N] : ||x/n^2|| < delta_fp}| via exact rational fractional parts.
u64 exact_count(const FracCountInstance& inst);

// Same count by cross-multiplied integer comparison; independent route.
u64 exact_count_crossmul(const FracCountInstance& inst);

struct BoundComparison {
  u64 count = 0;
  Rat term1 = 0;  // (T^2 N^{r(r-1)})^{1/(r(r+1))} = T^{2/(r(r+1))} N^{(r-1)/(r+1)}
  Rat term2 = 0;  // N delta^{2/((r-1)(r-2))}
  Rat term3 = 0;  // N (delta T N^{1-r})^{1/(r^2-3r+4)}
  Rat ratio = 0;  // count / (term1+term2+term3)
  bool hypothesis_ok = false;  // delta < k min(T N^{2-r}, T^{(r-4)/(r-2)} N^{3-r} + T N^{1-r})
  Rat hyp_threshold = 0;
};

BoundComparison ft_bound(const FracCountInstance& inst, const Rat& k = 1);

struct Prop1Block {
  u64 lo = 0, hi = 0;  // dyadic block (lo, hi]
  Int sum = 0;
  Rat bound = 0;  // (x lo^4)^{1/10}
};

struct Prop1Report {
  u64 range_lo = 0, range_hi = 0;  // (h, floor(c h^{5/2}/x^{1/4})]
  Int sum = 0;
  Rat bound_sum = 0;
  std::vector<Prop1Block> blocks;
};

// Exact sum of M_n over h < n <= c h^{5/2}/x^{1/4}, by dyadic blocks.
Int prop1_sum(const GlobalParams& params, const Rat& c);
Prop1Report prop1_report(const GlobalParams& params, const Rat& c);

}  // namespace sqf::fracparts
