#include "sqf/harvest.hpp"

namespace sqf::harvest {

std::vector<PairSample> shift_pairs(const census::WindowCensus& cen) {
  std::vector<PairSample> out;
  const auto& ms = cen.members;
  for (size_t i = 0; i + 1 < ms.size(); ++i) {
    u64 b = ms[i + 1].n - ms[i].n;
    // forward: m n^2 and (m-a)(n+b)^2 with (n, m) the lower member
    if (ms[i].m > ms[i + 1].m) {
      u64 a = ms[i].m - ms[i + 1].m;
      if (2 * a < ms[i].m && 2 * b < ms[i].n)
        out.push_back({shifts::ShiftPair::make(ms[i].m, ms[i].n, a, b, shifts::Direction::forward),
                       cen.N});
    }
    // backward: m n^2 and (m+a)(n-b)^2 with (n, m) the upper member
    if (ms[i].m > ms[i + 1].m) {
      u64 a = ms[i].m - ms[i + 1].m;
      if (2 * a < ms[i + 1].m && 2 * b < ms[i + 1].n)
        out.push_back(
            {shifts::ShiftPair::make(ms[i + 1].m, ms[i + 1].n, a, b, shifts::Direction::backward),
             cen.N});
    }
  }
  return out;
}

std::vector<shifts::Quadruple> quadruples(const census::WindowCensus& cen) {
  std::vector<shifts::Quadruple> out;
  const auto& ms = cen.members;
  for (size_t i = 0; i + 3 < ms.size(); ++i) {
    const auto &p1 = ms[i], &p2 = ms[i + 1], &p3 = ms[i + 2], &p4 = ms[i + 3];
    i64 a1 = static_cast<i64>(p1.m) - static_cast<i64>(p2.m);
    i64 a2 = static_cast<i64>(p2.m) - static_cast<i64>(p3.m);
    i64 a3 = static_cast<i64>(p3.m) - static_cast<i64>(p4.m);
    if (a1 < 1 || a2 < 1 || a3 < 1) continue;
    out.push_back(shifts::Quadruple::make(p2.m, p2.n, a1, p2.n - p1.n, a2, p3.n - p2.n, a3,
                                          p4.n - p3.n, cen.x, cen.h, /*witnessed=*/true));
  }
  return out;
}

WindowScan scan_windows(const GlobalParams& params, u64 N_lo, u64 N_hi) {
  WindowScan scan;
  auto ends = census::window_endpoints(N_lo, N_hi, params.L);
  for (size_t i = 0; i + 1 < ends.size(); ++i) {
    census::WindowCensus cen = census::census_range(ends[i], ends[i + 1], params);
    auto pairs = shift_pairs(cen);
    scan.pairs.insert(scan.pairs.end(), pairs.begin(), pairs.end());
    auto quads = quadruples(cen);
    scan.quads.insert(scan.quads.end(), quads.begin(), quads.end());
    scan.windows.push_back(std::move(cen));
  }
  return scan;
}

}  // namespace sqf::harvest
