// Exact arithmetic primitives shared by every module: 128-bit unsigned
// helpers, big integers / big rationals, integer k-th roots, and
// string conversions for deterministic reports.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqf {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline Int to_int(u128 v) {
  Int hi = static_cast<u64>(v >> 64);
  return (hi << 64) | static_cast<u64>(v);
}

std::string to_string(u128 v);
u128 parse_u128(std::string_view s);  // throws std::overflow_error past 2^128

u64 isqrt(u64 n);
u128 isqrt(u128 n);
bool is_perfect_square(u128 n);

// floor(a^{1/k}) for a >= 0, k >= 1.
Int nth_root_floor(const Int& a, unsigned k);

// floor(x^{p/q} * 10^scale) for x >= 0, exact (verified by integer powering).
Int floor_pow_ratio_scaled(const Int& x, unsigned p, unsigned q, unsigned scale);

// floor((numer/denom)^{1/k}) scaled to `digits` decimals, returned as a
// rational d/10^digits. Error < 10^-digits; used for report fields only,
// never for decisions.
Rat root_approx(const Int& numer, const Int& denom, unsigned k, unsigned digits = 6);

// Accepts "p/q", plain integers and decimal strings ("0.8334" -> 8334/10000).
Rat parse_rational(std::string_view s);

std::string rat_fraction_str(const Rat& r);                    // "p/q"
std::string rat_decimal_str(const Rat& r, unsigned digits = 6);  // truncated toward zero

double rat_to_double(const Rat& r);

}  // namespace sqf
