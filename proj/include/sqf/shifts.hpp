// Exact-arithmetic shift relations and differencings between near-equal
// products m n^2 ~ (m -+ a)(n +- b)^2: the delta relation, the truncated
// series for a, the three-member triple difference, Roth's first and
// second differencings, the Filaseta-Trifonov differencing and the
// first-witness differencing a1 - a3. Every operation evaluates its two
// defining routes exactly and reports main terms plus residual.
#pragma once

#include "sqf/params.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sqf::shifts {

enum class Direction {
  forward,   // companion (m - a)(n + b)^2
  backward,  // companion (m + a)(n - b)^2
};

struct ShiftPair {
  u64 m = 0, n = 0, a = 0, b = 0;
  Direction dir = Direction::forward;
  Int d = 0;  // companion product minus m n^2

  // Validates 1 <= a < m/2 and 1 <= b < n/2, then computes d.
  static ShiftPair make(u64 m, u64 n, u64 a, u64 b, Direction dir);
};

// Four members around m n^2: (m+a1)(n-b1)^2, m n^2, (m-a2)(n+b2)^2,
// (m-a2-a3)(n+b2+b3)^2. x/h carry the target interval when witnessed.
struct Quadruple {
  u64 m = 0, n = 0;
  i64 a1 = 0, a2 = 0, a3 = 0;
  u64 b1 = 0, b2 = 0, b3 = 0;
  u64 x = 0, h = 0;
  bool witnessed = false;

  static Quadruple make(u64 m, u64 n, i64 a1, u64 b1, i64 a2, u64 b2, i64 a3, u64 b3,
                        u64 x = 0, u64 h = 0, bool witnessed = false);

  std::array<Int, 4> products() const;
  bool products_in_interval() const;  // all four in (x, x+h]
};

struct DifferenceReport {
  Rat value = 0;  // exact
  std::vector<std::pair<std::string, Rat>> main_terms;
  Rat residual = 0;        // value - sum(main_terms), exact
  Rat residual_bound = 0;  // cited tail expression with constant 1 (0 = identity)
  Rat term_sum() const {
    Rat s = 0;
    for (const auto& t : main_terms) s += t.second;
    return s;
  }
};

// Delta = 2bm - an expressed through the exact three-term relation; the
// residual is identically zero.
DifferenceReport delta_relation(const ShiftPair& p);

// a as the truncated geometric series in b/n plus the exact boundary term
// -+d/(n+-b)^2; order <= 5. residual_bound = m b^{order+1} / n^{order+1}.
DifferenceReport series_expansion_a(const ShiftPair& p, int order = 5);

// D = b1(m-a2)(n+b2)^2 - (b1+b2)m n^2 + b2(m+a1)(n-b1)^2, cross-checked
// against its expanded form; exact agreement is enforced.
DifferenceReport triple_difference(const Quadruple& q);

// First differencing: forward m(2n-b) - (m-a)(2n+3b) = 2an - 4bm + 3ab,
// backward (m+a)(2n-3b) - m(2n+b) = 2an - 4bm - 3ab. h enters the residual
// bound h/n + m b^6/n^5 when known.
DifferenceReport roth_d1(const ShiftPair& p, u64 h = 0);

// Second differencing D4 = D3 - D2 across the quadruple.
DifferenceReport roth_d4(const Quadruple& q);

// D' = (b2 a1 - b1 a2) - (b3 a2 - b2 a3), checked against the four-term form.
DifferenceReport ft_dprime(const Quadruple& q);

// When b1 == b3 and b2 >= c_prime*b1 the leading term forces D' > 0.
// Returns nullopt when the hypothesis does not apply.
std::optional<bool> dprime_positive(const Quadruple& q, u64 c_prime = 100);

// The first-witness differencing a1 - a3 with its two main terms.
DifferenceReport new_diff(const Quadruple& q);

struct QuadrupleClass {
  bool a1_eq_a3 = false;
  bool d4_zero = false;
  bool shift_balance = false;  // |b1 - b3| <= 0.0001 n / M = 0.0001 n^3 / x
  Rat b_window_lower = 0;      // n/(M^{1/3} b1^{1/3}), 6-decimal approximation
  Rat b_window_upper = 0;      // h n^2/(M b1^3) = h n^4/(x b1^3), exact
  bool within_window = false;  // b1+b2 inside [lower, upper]; asserted when d4_zero
  bool b3_near_b1 = false;     // b3 within (1 +- 0.2) b1
};

QuadrupleClass classify_quadruple(const Quadruple& q, const GlobalParams& params);

}  // namespace sqf::shifts
