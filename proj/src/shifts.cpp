#include "sqf/shifts.hpp"

#include <sstream>

namespace sqf::shifts {

namespace {

Int sq(const Int& v) { return v * v; }

[[noreturn]] void identity_mismatch(const char* op, const Int& lhs, const Int& rhs) {
  std::ostringstream os;
  os << op << ": defining and expanded forms disagree (" << lhs << " vs " << rhs << ")";
  throw std::logic_error(os.str());
}

}  // namespace

ShiftPair ShiftPair::make(u64 m, u64 n, u64 a, u64 b, Direction dir) {
  if (a < 1 || 2 * Int(a) >= Int(m)) throw std::domain_error("ShiftPair: need 1 <= a < m/2");
  if (b < 1 || 2 * Int(b) >= Int(n)) throw std::domain_error("ShiftPair: need 1 <= b < n/2");
  ShiftPair p;
  p.m = m;
  p.n = n;
  p.a = a;
  p.b = b;
  p.dir = dir;
  Int M(m), N(n), A(a), B(b);
  p.d = dir == Direction::forward ? (M - A) * sq(N + B) - M * sq(N)
                                  : (M + A) * sq(N - B) - M * sq(N);
  return p;
}

Quadruple Quadruple::make(u64 m, u64 n, i64 a1, u64 b1, i64 a2, u64 b2, i64 a3, u64 b3,
                          u64 x, u64 h, bool witnessed) {
  if (b1 < 1 || b2 < 1 || b3 < 1) throw std::domain_error("Quadruple: b's must be >= 1");
  if (b1 >= n) throw std::domain_error("Quadruple: need b1 < n");
  Quadruple q;
  q.m = m;
  q.n = n;
  q.a1 = a1;
  q.a2 = a2;
  q.a3 = a3;
  q.b1 = b1;
  q.b2 = b2;
  q.b3 = b3;
  q.x = x;
  q.h = h;
  q.witnessed = witnessed;
  if (witnessed && !q.products_in_interval())
    throw std::domain_error("Quadruple: flagged witnessed but a product leaves (x, x+h]");
  return q;
}

std::array<Int, 4> Quadruple::products() const {
  Int M(m), N(n);
  return {
      (M + a1) * sq(N - Int(b1)),
      M * sq(N),
      (M - a2) * sq(N + Int(b2)),
      (M - a2 - a3) * sq(N + Int(b2) + Int(b3)),
  };
}

bool Quadruple::products_in_interval() const {
  for (const Int& v : products())
    if (v <= Int(x) || v > Int(x) + Int(h)) return false;
  return true;
}

DifferenceReport delta_relation(const ShiftPair& p) {
  Int M(p.m), N(p.n), A(p.a), B(p.b);
  DifferenceReport rep;
  rep.value = Rat(2 * B * M - A * N);
  if (p.dir == Direction::forward) {
    Int den = 2 * N + B;
    rep.main_terms = {
        {"3abn/(2n+b)", Rat(3 * A * B * N, den)},
        {"2ab^2/(2n+b)", Rat(2 * A * B * B, den)},
        {"2d/(2n+b)", Rat(2 * p.d, den)},
    };
  } else {
    Int den = 2 * N - B;
    rep.main_terms = {
        {"-3abn/(2n-b)", Rat(-3 * A * B * N, den)},
        {"2ab^2/(2n-b)", Rat(2 * A * B * B, den)},
        {"-2d/(2n-b)", Rat(-2 * p.d, den)},
    };
  }
  rep.residual = rep.value - rep.term_sum();
  rep.residual_bound = 0;
  return rep;
}

DifferenceReport series_expansion_a(const ShiftPair& p, int order) {
  if (order < 1 || order > 5) throw std::domain_error("series_expansion_a: order must be 1..5");
  Int M(p.m), N(p.n), B(p.b);
  DifferenceReport rep;
  rep.value = Rat(Int(p.a));
  Int bpow = 1, npow = 1;
  for (int k = 1; k <= order; ++k) {
    bpow *= B;
    npow *= N;
    Int coeff = k + 1;
    bool negative = p.dir == Direction::forward && k % 2 == 0;
    Rat term(M * coeff * bpow, npow);
    if (negative) term = -term;
    std::ostringstream label;
    label << (negative ? "-" : "") << (k + 1) << "mb^" << k << "/n^" << k;
    rep.main_terms.emplace_back(label.str(), term);
  }
  if (p.dir == Direction::forward)
    rep.main_terms.emplace_back("-d/(n+b)^2", Rat(-p.d, sq(N + B)));
  else
    rep.main_terms.emplace_back("d/(n-b)^2", Rat(p.d, sq(N - B)));
  rep.residual = rep.value - rep.term_sum();
  rep.residual_bound = Rat(M * bpow * B, npow * N);
  return rep;
}

DifferenceReport triple_difference(const Quadruple& q) {
  Int M(q.m), N(q.n), A1(q.a1), A2(q.a2), B1(q.b1), B2(q.b2);
  Int defining = B1 * (M - A2) * sq(N + B2) - (B1 + B2) * M * sq(N) + B2 * (M + A1) * sq(N - B1);
  Int delta1 = 2 * B1 * M - A1 * N;
  Int delta2 = 2 * B2 * M - A2 * N;
  Int t1 = (A1 * B2 - A2 * B1) * sq(N);
  Int t2 = -3 * B1 * B2 * (B1 + B2) * M;
  Int t3 = 2 * B1 * B2 * (delta1 + delta2);
  Int t4 = B1 * B2 * (A1 * B1 - A2 * B2);
  Int expanded = t1 + t2 + t3 + t4;
  if (defining != expanded) identity_mismatch("triple_difference", defining, expanded);
  DifferenceReport rep;
  rep.value = Rat(defining);
  rep.main_terms = {
      {"(a1b2-a2b1)n^2", Rat(t1)},
      {"-3b1b2(b1+b2)m", Rat(t2)},
      {"2b1b2(D1+D2)", Rat(t3)},
      {"b1b2(a1b1-a2b2)", Rat(t4)},
  };
  rep.residual = 0;
  rep.residual_bound = 0;
  return rep;
}

DifferenceReport roth_d1(const ShiftPair& p, u64 h) {
  Int M(p.m), N(p.n), A(p.a), B(p.b);
  Int defining, linear;
  bool forward = p.dir == Direction::forward;
  if (forward) {
    defining = M * (2 * N - B) - (M - A) * (2 * N + 3 * B);
    linear = 2 * A * N - 4 * B * M + 3 * A * B;
  } else {
    defining = (M + A) * (2 * N - 3 * B) - M * (2 * N + B);
    linear = 2 * A * N - 4 * B * M - 3 * A * B;
  }
  if (defining != linear) identity_mismatch("roth_d1", defining, linear);
  DifferenceReport rep;
  rep.value = Rat(defining);
  Int b3 = B * B * B, n2 = sq(N);
  rep.main_terms = {
      {"-mb^3/n^2", Rat(-M * b3, n2)},
      {forward ? "2mb^4/n^3" : "-2mb^4/n^3",
       forward ? Rat(2 * M * b3 * B, n2 * N) : Rat(-2 * M * b3 * B, n2 * N)},
      {"-3mb^5/n^4", Rat(-3 * M * b3 * B * B, sq(n2))},
  };
  rep.residual = rep.value - rep.term_sum();
  rep.residual_bound = Rat(Int(h), N) + Rat(M * b3 * b3, sq(n2) * N);
  return rep;
}

DifferenceReport roth_d4(const Quadruple& q) {
  Int M(q.m), N(q.n), A1(q.a1), A2(q.a2), A3(q.a3), B1(q.b1), B2(q.b2), B3(q.b3);
  Int d2 = (M + A1) * (2 * N - 3 * B1) - M * (2 * N + B1);
  Int d3 = (M - A2) * (2 * (N + B2) - B3) - (M - A2 - A3) * (2 * (N + B2) + 3 * B3);
  Int defining = d3 - d2;
  Int linear = 2 * (A3 - A1) * N - 4 * (B3 - B1) * M + 2 * A3 * B2 + 4 * A2 * B3 +
               3 * A1 * B1 + 3 * A3 * B3;
  if (defining != linear) identity_mismatch("roth_d4", defining, linear);
  DifferenceReport rep;
  rep.value = Rat(defining);
  Int n2 = sq(N), n3 = n2 * N, n4 = sq(n2);
  rep.main_terms = {
      {"m(2b1^4+4b2b3^3+2b3^4)/n^3",
       Rat(M * (2 * pow(B1, 4) + 4 * B2 * pow(B3, 3) + 2 * pow(B3, 4)), n3)},
      {"m(b1-b3)(b1^2+b1b3+b3^2)/n^2",
       Rat(M * (B1 - B3) * (sq(B1) + B1 * B3 + sq(B3)), n2)},
      {"m(3b1^5-10b2^2b3^3-10b2b3^4-3b3^5)/n^4",
       Rat(M * (3 * pow(B1, 5) - 10 * sq(B2) * pow(B3, 3) - 10 * B2 * pow(B3, 4) -
                3 * pow(B3, 5)),
           n4)},
  };
  rep.residual = rep.value - rep.term_sum();
  Int bsum = B1 + B2 + B3;
  rep.residual_bound =
      Rat(Int(q.h), N) + Rat(M * (pow(B1, 3) + pow(B3, 3)) * pow(bsum, 3), n4 * N);
  return rep;
}

DifferenceReport ft_dprime(const Quadruple& q) {
  Int M(q.m), N(q.n), A1(q.a1), A2(q.a2), A3(q.a3), B1(q.b1), B2(q.b2), B3(q.b3);
  Int bsum = B1 + B2 + B3;
  Int defining = B2 * (M + A1) - bsum * M + bsum * (M - A2) - B2 * (M - A2 - A3);
  Int linear = (B2 * A1 - B1 * A2) - (B3 * A2 - B2 * A3);
  if (defining != linear) identity_mismatch("ft_dprime", defining, linear);
  DifferenceReport rep;
  rep.value = Rat(defining);
  Int n2 = sq(N), n3 = n2 * N, n4 = sq(n2);
  rep.main_terms = {
      {"4mb2(b1^3+b3^3+3b3^2b2+2b3b2^2-b1b2^2)/n^3",
       Rat(4 * M * B2 *
               (pow(B1, 3) + pow(B3, 3) + 3 * sq(B3) * B2 + 2 * B3 * sq(B2) - B1 * sq(B2)),
           n3)},
      {"3m(b1-b3)b2(b1+b2+b3)/n^2", Rat(3 * M * (B1 - B3) * B2 * bsum, n2)},
      {"m(5b1^4b2+5b2^4b1-15b2^4b3-30b2^3b3^2-28b2^2b3^3-5b2b3^4)/n^4",
       Rat(M * (5 * pow(B1, 4) * B2 + 5 * pow(B2, 4) * B1 - 15 * pow(B2, 4) * B3 -
                30 * pow(B2, 3) * sq(B3) - 28 * sq(B2) * pow(B3, 3) - 5 * B2 * pow(B3, 4)),
           n4)},
  };
  rep.residual = rep.value - rep.term_sum();
  rep.residual_bound = Rat(M * (B1 + B3) * (pow(B1, 5) + pow(B2, 5) + pow(B3, 5)), n4 * N) +
                       Rat(bsum * Int(q.h), n2);
  return rep;
}

std::optional<bool> dprime_positive(const Quadruple& q, u64 c_prime) {
  if (q.b1 != q.b3 || Int(q.b2) < Int(c_prime) * q.b1) return std::nullopt;
  return ft_dprime(q).value > 0;
}

DifferenceReport new_diff(const Quadruple& q) {
  Int M(q.m), N(q.n), B1(q.b1), B2(q.b2), B3(q.b3);
  DifferenceReport rep;
  rep.value = Rat(Int(q.a1) - Int(q.a3));
  Int n2 = sq(N);
  rep.main_terms = {
      {"6mb1(b1+b2)/n^2", Rat(6 * M * B1 * (B1 + B2), n2)},
      {"2m(b1-b3)/n", Rat(2 * M * (B1 - B3), N)},
  };
  rep.residual = rep.value - rep.term_sum();
  Int bsum = B1 + B2 + B3;
  Int bdiff = B1 > B3 ? B1 - B3 : B3 - B1;
  rep.residual_bound = Rat(Int(q.h), n2) + Rat(M * (B1 + B3) * sq(bsum), n2 * N) +
                       Rat(M * bdiff * bsum, n2);
  return rep;
}

QuadrupleClass classify_quadruple(const Quadruple& q, const GlobalParams& params) {
  QuadrupleClass cls;
  cls.a1_eq_a3 = q.a1 == q.a3;
  cls.d4_zero = roth_d4(q).value == 0;
  Int N(q.n);
  Int bdiff = q.b1 > q.b3 ? Int(q.b1) - q.b3 : Int(q.b3) - q.b1;
  // |b1 - b3| <= 0.0001 n/M with M = x/n^2, i.e. 10^4 |b1-b3| x <= n^3.
  cls.shift_balance = bdiff * 10000 * params.x <= pow(N, 3);
  Int span = Int(q.b1) + q.b2;
  // lower = (n^5/(x b1))^{1/3}; span >= lower <=> span^3 x b1 >= n^5.
  bool above_lower = pow(span, 3) * params.x * q.b1 >= pow(N, 5);
  cls.b_window_lower = root_approx(pow(N, 5), Int(params.x) * q.b1, 3);
  cls.b_window_upper = Rat(Int(params.h) * pow(N, 4), Int(params.x) * pow(Int(q.b1), 3));
  cls.within_window = above_lower && Rat(span) <= cls.b_window_upper;
  cls.b3_near_b1 = 5 * Int(q.b3) >= 4 * Int(q.b1) && 5 * Int(q.b3) <= 6 * Int(q.b1);
  return cls;
}

}  // namespace sqf::shifts
