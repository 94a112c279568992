#include "sqf/fracparts.hpp"

#include "sqf/census.hpp"

namespace sqf::fracparts {

FracCountInstance FracCountInstance::make(u64 x, u64 N, const Rat& delta_fp, int r) {
  if (N < 2) throw std::invalid_argument("FracCountInstance: N must be >= 2");
  if (r < 3) throw std::invalid_argument("FracCountInstance: r must be >= 3");
  if (delta_fp <= 0 || delta_fp >= Rat(1, 2))
    throw std::invalid_argument("FracCountInstance: delta must lie in (0, 1/2)");
  FracCountInstance inst;
  inst.x = x;
  inst.N = N;
  inst.delta_fp = delta_fp;
  inst.r = r;
  return inst;
}

u64 exact_count(const FracCountInstance& inst) {
  u64 count = 0;
  for (u64 n = inst.N + 1; n <= 2 * inst.N; ++n) {
    u128 n2 = static_cast<u128>(n) * n;
    u128 rem = inst.x % n2;
    Rat frac(to_int(rem), to_int(n2));
    Rat dist = frac <= Rat(1, 2) ? frac : 1 - frac;
    if (dist < inst.delta_fp) ++count;
  }
  return count;
}

u64 exact_count_crossmul(const FracCountInstance& inst) {
  u64 count = 0;
  Int dn = rat_num(inst.delta_fp), dd = rat_den(inst.delta_fp);
  for (u64 n = inst.N + 1; n <= 2 * inst.N; ++n) {
    u128 n2 = static_cast<u128>(n) * n;
    u128 rem = inst.x % n2;
    u128 dist2 = rem <= n2 - rem ? rem : n2 - rem;  // min(rem, n^2-rem)
    // dist2/n^2 < dn/dd  <=>  dist2*dd < dn*n^2
    if (to_int(dist2) * dd < dn * to_int(n2)) ++count;
  }
  return count;
}

BoundComparison ft_bound(const FracCountInstance& inst, const Rat& k) {
  const unsigned r = static_cast<unsigned>(inst.r);
  BoundComparison cmp;
  cmp.count = exact_count(inst);
  Int x(inst.x), N(inst.N);
  Int dn = rat_num(inst.delta_fp), dd = rat_den(inst.delta_fp);

  // term1 = (x^2 N^{r^2-r-4})^{1/(r(r+1))}
  cmp.term1 = root_approx(x * x * pow(N, r * r - r - 4), Int(1), r * (r + 1));
  // term2 = (N^{k2} delta^2)^{1/k2}, k2 = (r-1)(r-2)
  unsigned k2 = (r - 1) * (r - 2);
  cmp.term2 = root_approx(pow(N, k2) * dn * dn, dd * dd, k2);
  // term3 = (delta x N^{(r-1)(r-3)})^{1/k3}, k3 = r^2-3r+4
  unsigned k3 = r * r - 3 * r + 4;
  cmp.term3 = root_approx(dn * x * pow(N, (r - 1) * (r - 3)), dd, k3);

  Rat total = cmp.term1 + cmp.term2 + cmp.term3;
  cmp.ratio = total > 0 ? Rat(cmp.count) / total : Rat(0);

  // Hypothesis threshold. T N^{2-r} is rational; the second branch is
  // rational for r in {3, 4} and approximated through a root otherwise.
  Rat T = inst.T();
  Rat first = T / Rat(pow(N, r - 2));
  Rat second;
  if (r == 3)
    second = 1 / T + T / Rat(N * N);
  else if (r == 4)
    second = Rat(1, N) + T / Rat(pow(N, 3));
  else
    second = root_approx(pow(rat_num(T), r - 4), pow(rat_den(T), r - 4), r - 2) /
                 Rat(pow(N, r - 3)) +
             T / Rat(pow(N, r - 1));
  cmp.hyp_threshold = k * (first < second ? first : second);
  cmp.hypothesis_ok = inst.delta_fp < cmp.hyp_threshold;
  return cmp;
}

namespace {

// Largest n with n^4 x c_den^4 <= c_num^4 h^10, i.e. n <= c h^{5/2} / x^{1/4}.
u64 prop1_range_top(u64 x, u64 h, const Rat& c) {
  Int rhs = pow(rat_num(c), 4) * pow(Int(h), 10);
  Int scale = Int(x) * pow(rat_den(c), 4);
  Int n = nth_root_floor(rhs / scale, 4);
  while (pow(n + 1, 4) * scale <= rhs) ++n;
  while (n > 0 && pow(n, 4) * scale > rhs) --n;
  return n.convert_to<u64>();
}

}  // namespace

Prop1Report prop1_report(const GlobalParams& params, const Rat& c) {
  Prop1Report rep;
  rep.range_lo = params.h;
  rep.range_hi = prop1_range_top(params.x, params.h, c);
  if (rep.range_hi <= rep.range_lo) {
    rep.range_hi = rep.range_lo;  // empty range
    return rep;
  }
  u64 lo = rep.range_lo;
  while (lo < rep.range_hi) {
    u64 hi = std::min(rep.range_hi, 2 * lo);
    Prop1Block block{lo, hi, 0, 0};
    for (u64 n = lo + 1; n <= hi; ++n) block.sum += census::multiples_in_interval(n, params);
    block.bound = root_approx(Int(params.x) * pow(Int(lo), 4), Int(1), 10);
    rep.sum += block.sum;
    rep.bound_sum += block.bound;
    rep.blocks.push_back(std::move(block));
    lo = hi;
  }
  return rep;
}

Int prop1_sum(const GlobalParams& params, const Rat& c) { return prop1_report(params, c).sum; }

}  // namespace sqf::fracparts
