// Turning census windows into shift pairs and quadruples: consecutive
// members (n, n') with witnesses (m, m') yield a forward pair centered at
// the lower member and a backward pair centered at the upper one; four
// consecutive members yield one quadruple centered at the second.
#pragma once

#include "sqf/census.hpp"
#include "sqf/shifts.hpp"

#include <vector>

namespace sqf::harvest {

struct PairSample {
  shifts::ShiftPair pair;
  u64 N = 0;  // window the pair came from
};

// Both orientations per consecutive member pair; pairs violating the
// construction bounds (a >= m/2 or b >= n/2) are skipped.
std::vector<PairSample> shift_pairs(const census::WindowCensus& cen);

// One witnessed quadruple per run of four consecutive members; runs whose
// derived shifts are non-positive are skipped.
std::vector<shifts::Quadruple> quadruples(const census::WindowCensus& cen);

struct WindowScan {
  std::vector<census::WindowCensus> windows;
  std::vector<PairSample> pairs;
  std::vector<shifts::Quadruple> quads;
};

// Census every lambda-adic window of (N_lo, N_hi] and harvest from each.
WindowScan scan_windows(const GlobalParams& params, u64 N_lo, u64 N_hi);

}  // namespace sqf::harvest
