#include "sqf/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace sqf {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  char buf[48];
  int pos = 0;
  while (v > 0) {
    buf[pos++] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(std::make_reverse_iterator(buf + pos), std::make_reverse_iterator(buf));
}

u128 parse_u128(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  constexpr u128 kMax = ~static_cast<u128>(0);
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
    unsigned d = static_cast<unsigned>(c - '0');
    if (v > (kMax - d) / 10) throw std::overflow_error("integer literal exceeds 128-bit width");
    v = v * 10 + d;
  }
  return v;
}

u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

u128 isqrt(u128 n) {
  if (n == 0) return 0;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  if (r == 0) r = 1;
  while (r > n / r) r = (r + n / r) / 2;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_perfect_square(u128 n) {
  u128 r = isqrt(n);
  return r * r == n;
}

Int nth_root_floor(const Int& a, unsigned k) {
  if (a < 0) throw std::domain_error("nth_root_floor: negative radicand");
  if (k == 0) throw std::domain_error("nth_root_floor: k must be >= 1");
  if (k == 1 || a <= 1) return a;
  // Binary search on the bit length keeps this robust for any size.
  unsigned bits = static_cast<unsigned>(msb(a)) + 1;
  Int lo = 1;
  Int hi = Int(1) << (bits / k + 1);
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (pow(mid, k) <= a)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

Int floor_pow_ratio_scaled(const Int& x, unsigned p, unsigned q, unsigned scale) {
  if (q == 0) throw std::domain_error("floor_pow_ratio_scaled: q must be >= 1");
  Int radicand = pow(x, p) * pow(Int(10), scale * q);
  return nth_root_floor(radicand, q);
}

Rat root_approx(const Int& numer, const Int& denom, unsigned k, unsigned digits) {
  if (denom <= 0) throw std::domain_error("root_approx: denominator must be positive");
  Int scaled = numer * pow(Int(10), digits * k) / denom;
  return Rat(nth_root_floor(scaled, k), pow(Int(10), digits));
}

namespace {

// boost cpp_int reads a leading 0 as an octal prefix; parse base-10 only.
Int int_from_decimal(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  Int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
    v = v * 10 + (c - '0');
  }
  return neg ? -v : v;
}

}  // namespace

Rat parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    Int n = int_from_decimal(s.substr(0, slash));
    Int d = int_from_decimal(s.substr(slash + 1));
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rat(n, d);
  }
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return Rat(int_from_decimal(s));
  bool neg = !s.empty() && s.front() == '-';
  std::string digits;
  for (char c : s) {
    if (c == '.' || c == '-' || c == '+') continue;
    if (c < '0' || c > '9') throw std::invalid_argument("bad rational literal");
    digits.push_back(c);
  }
  size_t frac_len = s.size() - dot - 1;
  Rat r(int_from_decimal(digits.empty() ? "0" : digits),
        pow(Int(10), static_cast<unsigned>(frac_len)));
  return neg ? -r : r;
}

std::string rat_fraction_str(const Rat& r) {
  return rat_num(r).str() + "/" + rat_den(r).str();
}

std::string rat_decimal_str(const Rat& r, unsigned digits) {
  Int n = rat_num(r), d = rat_den(r);
  bool neg = n < 0;
  if (neg) n = -n;
  Int scale = pow(Int(10), digits);
  Int whole = n / d;
  Int frac = (n % d) * scale / d;
  std::string fs = frac.str();
  fs.insert(fs.begin(), digits - fs.size(), '0');
  return (neg ? "-" : "") + whole.str() + "." + fs;
}

double rat_to_double(const Rat& r) { return static_cast<double>(r); }

}  // namespace sqf
