// JSON / CSV serialization for the report types. Exact rationals are
// emitted as "p/q" strings next to fixed-precision decimal renderings; all
// output is byte-deterministic for fixed inputs.
#pragma once

#include "sqf/census.hpp"
#include "sqf/chain.hpp"
#include "sqf/fracparts.hpp"
#include "sqf/shifts.hpp"
#include "sqf/sieve.hpp"

#include "json.hpp"

#include <ostream>

namespace sqf::io {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);  // {"frac": "p/q", "dec": "..."}

Json census_json(const census::WindowCensus& cen, const GlobalParams& params);
Json spacing_json(const census::SpacingReport& rep);
Json prebound_json(const census::PreboundReport& rep);
Json difference_json(const shifts::DifferenceReport& rep);
Json chain_report_json(const chain::ChainReport& rep, const chain::ChainCertificate& cert);
Json bound_comparison_json(const fracparts::BoundComparison& cmp, u64 x, u64 N);

void gap_records_csv(std::ostream& out, const std::vector<sieve::GapRecord>& records);
Json gap_records_json(const std::vector<sieve::GapRecord>& records);

void decomposition_csv(std::ostream& out, const census::DecompositionReport& rep);
void bound_comparison_csv(std::ostream& out, const fracparts::FracCountInstance& inst,
                          const fracparts::BoundComparison& cmp);

}  // namespace sqf::io
