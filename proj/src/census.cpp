#include "sqf/census.hpp"

#include "sqf/sieve.hpp"

#include <cmath>

namespace sqf {

u64 default_h(u64 x, const Rat& C0, const Rat& theta) {
  Int p = rat_num(theta), q = rat_den(theta);
  if (p <= 0 || q <= 0) throw std::domain_error("default_h: theta must be positive");
  unsigned pe = p.convert_to<unsigned>(), qe = q.convert_to<unsigned>();
  // largest h with (h * C0_den)^q <= C0_num^q * x^p
  Int radicand = pow(rat_num(C0), qe) * pow(Int(x), pe);
  Int root = nth_root_floor(radicand, qe);
  Int h = root / rat_den(C0);
  return h.convert_to<u64>();
}

GlobalParams make_params(u64 x, u64 h_or_zero, const Rat& C0, u32 L, const Rat& c0,
                         const Rat& theta, const Rat& delta) {
  if (x < 1) throw std::invalid_argument("make_params: x must be >= 1");
  if (L < 1) throw std::invalid_argument("make_params: L must be >= 1");
  GlobalParams p;
  p.x = x;
  p.C0 = C0;
  p.theta = theta;
  p.delta = delta;
  p.L = L;
  p.lambda = 1 + Rat(1, L);
  p.c0 = c0;
  p.h = h_or_zero != 0 ? h_or_zero : default_h(x, C0, theta);
  if (p.h < 1) throw std::invalid_argument("make_params: derived h is zero; raise C0");
  return p;
}

namespace census {

u64 multiples_in_interval(u64 n, const GlobalParams& params) {
  if (n < 2) throw std::domain_error("multiples_in_interval: n must be >= 2");
  u128 n2 = static_cast<u128>(n) * n;
  u128 hi = static_cast<u128>(params.x) + params.h;
  return static_cast<u64>(hi / n2 - params.x / n2);
}

WindowCensus census_range(u64 lo, u64 hi, const GlobalParams& params) {
  WindowCensus out;
  out.x = params.x;
  out.h = params.h;
  out.N = lo;
  out.window_hi = hi;
  out.L = params.L;
  u128 top = static_cast<u128>(params.x) + params.h;
  for (u64 n = lo + 1; n <= hi; ++n) {
    u128 n2 = static_cast<u128>(n) * n;
    if (n2 > top) break;
    u128 m = params.x / n2 + 1;  // unique candidate witness
    if (m * n2 <= top) out.members.push_back({n, static_cast<u64>(m)});
  }
  for (size_t i = 1; i < out.members.size(); ++i)
    ++out.gaps[out.members[i].n - out.members[i - 1].n];
  return out;
}

WindowCensus census(u64 N, const GlobalParams& params) {
  if (N <= params.h) throw std::invalid_argument("census: need N > h for witness uniqueness");
  return census_range(N, N + N / params.L, params);
}

std::vector<u64> window_endpoints(u64 lo, u64 hi, u32 L) {
  if (lo >= hi) return {};
  std::vector<u64> ends{lo};
  Rat lam = 1 + Rat(1, L);
  Rat power(lo);
  while (ends.back() < hi) {
    power *= lam;
    Int next_end = rat_num(power) / rat_den(power);
    if (rat_num(power) % rat_den(power) != 0) next_end += 1;  // ceil
    u64 nk = next_end.convert_to<u64>();
    if (nk <= ends.back()) nk = ends.back() + 1;
    ends.push_back(std::min(nk, hi));
  }
  return ends;
}

bool gap_exceeds_radius(u64 b, u64 N, u64 x, const Rat& c0) {
  Int lhs = pow(Int(b), 3) * x * pow(rat_den(c0), 3);
  Int rhs = pow(rat_num(c0), 3) * pow(Int(N), 4);
  return lhs > rhs;
}

DecompositionReport decompose(const GlobalParams& params, const Rat& c) {
  if (c <= 0 || c >= 1) throw std::domain_error("decompose: c must lie in (0,1)");
  const u64 x = params.x, h = params.h;
  DecompositionReport rep;

  // Range tops. t2 is exact (p <= c h^{5/2} x^{-1/4} <=> p^4 x cd^4 <= cn^4 h^10),
  // t3 involves log^2 x and is evaluated in floating point, t4 is exact.
  rep.t1 = h;
  {
    Int radicand = pow(rat_num(c), 4) * pow(Int(h), 10) / (pow(rat_den(c), 4) * x);
    Int t2 = nth_root_floor(radicand, 4);
    while (pow(t2 + 1, 4) * x * pow(rat_den(c), 4) <= pow(rat_num(c), 4) * pow(Int(h), 10)) ++t2;
    while (t2 > 0 && pow(t2, 4) * x * pow(rat_den(c), 4) > pow(rat_num(c), 4) * pow(Int(h), 10)) --t2;
    rep.t2 = t2.convert_to<u64>();
  }
  {
    double lx = std::log(static_cast<double>(x));
    double t3 = std::pow(static_cast<double>(x), 2.0 / 3.0) * lx * lx /
                std::pow(static_cast<double>(h), 5.0 / 3.0);
    rep.t3 = t3 >= 0 && t3 < 4e18 ? static_cast<u64>(t3) : ~u64{0};
  }
  rep.t4 = static_cast<u64>(isqrt(static_cast<u128>(4) * x));  // floor(2 sqrt x)

  // Half-open ranges with monotone clamping so each prime lands in one bucket.
  u64 c1 = rep.t1;
  u64 c2 = std::max(c1, rep.t2);
  u64 c3 = std::max(c2, rep.t3);
  u64 c4 = std::max(c3, rep.t4);
  const auto& primes = sieve::primes_upto(c4);
  for (u64 p : primes) {
    if (p > c4) break;
    if (static_cast<u128>(p) * p > static_cast<u128>(x) + h) break;
    u64 mp = multiples_in_interval(p, params);
    if (mp == 0) continue;
    if (p <= c1)
      rep.S1 += mp;
    else if (p <= c2)
      rep.S2 += mp;
    else if (p <= c3)
      rep.S3 += mp;
    else
      rep.S4 += mp;
  }

  sieve::SieveSegment seg = sieve::sieve_segment(static_cast<u128>(x) + 1,
                                                 static_cast<u128>(x) + h + 1,
                                                 std::max<u64>(h, 1));
  for (bool f : seg.flags) rep.total_nonsquarefree += !f;
  return rep;
}

SpacingReport spacing_check(const WindowCensus& cen, const Rat& c0) {
  SpacingReport rep;
  const auto& ms = cen.members;
  if (ms.size() < 3) return rep;
  std::optional<Rat> min_cubed;
  for (size_t i = 0; i + 2 < ms.size(); ++i) {
    u64 span = ms[i + 2].n - ms[i].n;
    ++rep.triple_count;
    // normalized^3 = span^3 * x / N^4
    Rat cubed(pow(Int(span), 3) * cen.x, pow(Int(cen.N), 4));
    if (!min_cubed || cubed < *min_cubed) min_cubed = cubed;
    if (!gap_exceeds_radius(span, cen.N, cen.x, c0))
      rep.violations.push_back({ms[i].n, ms[i + 1].n, ms[i + 2].n, span});
  }
  if (min_cubed) {
    rep.min_span_normalized_cubed = *min_cubed;
    rep.min_span_normalized = root_approx(rat_num(*min_cubed), rat_den(*min_cubed), 3);
  }
  return rep;
}

PreboundReport prebound_terms(const WindowCensus& cen, const GlobalParams& params) {
  PreboundReport rep;
  rep.member_count = cen.members.size();
  double lx = std::log(static_cast<double>(params.x));
  double log12 = std::pow(lx, 1.2);
  rep.B = static_cast<double>(cen.N) * log12 / static_cast<double>(params.h);
  rep.tail = parse_rational(std::to_string(static_cast<double>(params.h) /
                                           (static_cast<double>(params.L) * log12)));
  for (const auto& [b, t] : cen.gaps) {
    rep.sum_t_all += t;
    bool beyond = gap_exceeds_radius(b, cen.N, cen.x, params.c0);
    if (beyond)
      rep.sum_t_gt_R += t;
    else
      rep.sum_t_le_R += t;
    if (beyond && static_cast<double>(b) <= rep.B) rep.capped_sum += t;
  }
  rep.pair_bound_rhs = 2 + 2 * rep.sum_t_gt_R;
  rep.bound_holds = rep.member_count <= rep.pair_bound_rhs;
  return rep;
}

}  // namespace census
}  // namespace sqf
