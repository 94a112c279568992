// Shared run parameters: the target interval (x, x+h], the window ratio
// lambda = 1 + 1/L and the tuning constants used across modules.
#pragma once

#include "sqf/numeric.hpp"

namespace sqf {

struct GlobalParams {
  u64 x = 0;
  u64 h = 0;
  Rat C0 = 1;
  Rat theta = Rat(5, 26);
  Rat delta = Rat(751, 10000);
  u32 L = 10;
  Rat lambda = Rat(11, 10);  // 1 + 1/L
  Rat c0 = Rat(1, 20);       // spacing constant, CLI-overridable

  // h <= x/10 is the range the counting arguments assume; larger h is
  // allowed but flagged.
  bool h_in_permitted_range() const { return h >= 1 && Int(h) * 10 <= Int(x); }
};

// h defaults to floor(C0 * x^theta) when not given explicitly.
GlobalParams make_params(u64 x, u64 h_or_zero, const Rat& C0, u32 L, const Rat& c0,
                         const Rat& theta = Rat(5, 26), const Rat& delta = Rat(751, 10000));

// Largest h with h <= C0 * x^(p/q), exact.
u64 default_h(u64 x, const Rat& C0, const Rat& theta);

}  // namespace sqf
