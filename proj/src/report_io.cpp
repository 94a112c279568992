#include "sqf/report_io.hpp"

namespace sqf::io {

Json rat_json(const Rat& r) {
  return Json{{"frac", rat_fraction_str(r)}, {"dec", rat_decimal_str(r)}};
}

Json census_json(const census::WindowCensus& cen, const GlobalParams& params) {
  Json members = Json::array();
  for (const auto& mem : cen.members) members.push_back(Json{{"n", mem.n}, {"m", mem.m}});
  Json gaps = Json::object();
  for (const auto& [b, t] : cen.gaps) gaps[std::to_string(b)] = t;

  // R = c0 N^{4/3}/x^{1/3} and Q = max(R, x^{1/5-delta}); both reported as
  // 6-decimal approximations of the exact roots.
  Int N(cen.N), x(cen.x);
  Rat R = params.c0 * root_approx(pow(N, 4), x, 3);
  Rat pow_exp = Rat(1, 5) - params.delta;  // x^{1/5-delta}
  Int pe_num = rat_num(pow_exp), pe_den = rat_den(pow_exp);
  Rat xq(floor_pow_ratio_scaled(x, pe_num.convert_to<unsigned>(), pe_den.convert_to<unsigned>(), 6),
         pow(Int(10), 6));
  Rat Q = R > xq ? R : xq;

  Json j;
  j["x"] = cen.x;
  j["h"] = cen.h;
  j["N"] = cen.N;
  j["L"] = cen.L;
  j["members"] = std::move(members);
  j["gaps"] = std::move(gaps);
  j["R"] = rat_decimal_str(R);
  j["Q"] = rat_decimal_str(Q);
  return j;
}

Json spacing_json(const census::SpacingReport& rep) {
  Json v = Json::array();
  for (const auto& t : rep.violations)
    v.push_back(Json{{"n1", t.n1}, {"n2", t.n2}, {"n3", t.n3}, {"span", t.span}});
  Json j;
  j["triple_count"] = rep.triple_count;
  j["violations"] = std::move(v);
  if (rep.min_span_normalized)
    j["min_triple_span"] = rat_decimal_str(*rep.min_span_normalized);
  else
    j["min_triple_span"] = nullptr;
  return j;
}

Json prebound_json(const census::PreboundReport& rep) {
  Json j;
  j["members"] = rep.member_count;
  j["sum_t_all"] = rep.sum_t_all;
  j["sum_t_gt_R"] = rep.sum_t_gt_R;
  j["sum_t_le_R"] = rep.sum_t_le_R;
  j["capped_sum"] = rep.capped_sum;
  j["B"] = rep.B;
  j["tail"] = rat_decimal_str(rep.tail);
  j["pair_bound_rhs"] = rep.pair_bound_rhs;
  j["bound_holds"] = rep.bound_holds;
  return j;
}

Json difference_json(const shifts::DifferenceReport& rep) {
  Json terms = Json::array();
  for (const auto& [label, value] : rep.main_terms)
    terms.push_back(Json{{"label", label}, {"value", rat_fraction_str(value)}});
  Json j;
  j["value"] = rat_fraction_str(rep.value);
  j["main_terms"] = std::move(terms);
  j["residual"] = rat_fraction_str(rep.residual);
  j["residual_bound"] = rat_fraction_str(rep.residual_bound);
  return j;
}

Json chain_report_json(const chain::ChainReport& rep, const chain::ChainCertificate& cert) {
  Json steps = Json::array();
  for (size_t i = 0; i < rep.steps.size(); ++i) {
    const auto& sr = rep.steps[i];
    const auto& st = cert.steps[i];
    Json terms = Json::array();
    for (const auto& t : sr.profile.terms)
      terms.push_back(Json{{"name", t.name},
                           {"l_weighted", t.l_weighted},
                           {"exp_lo", rat_fraction_str(t.exp_lo)},
                           {"exp_hi", rat_fraction_str(t.exp_hi)},
                           {"ok", t.ok},
                           {"at_l_margin", t.at_l_margin}});
    steps.push_back(Json{{"alpha", rat_decimal_str(st.alpha, 7)},
                         {"beta", rat_decimal_str(st.beta, 7)},
                         {"branch", chain::branch_name(st.branch)},
                         {"next_alpha", rat_decimal_str(st.next_alpha, 7)},
                         {"computed_next", rat_decimal_str(sr.computed_next, 7)},
                         {"feasible", sr.feasible},
                         {"feasibility_margin", rat_fraction_str(sr.feasibility_margin)},
                         {"continuity", sr.continuity},
                         {"reconciled", sr.reconciled},
                         {"recon_diff", rat_fraction_str(sr.recon_diff)},
                         {"error_terms_ok", sr.error_terms_ok},
                         {"branch_dominant", sr.branch_dominant},
                         {"error_terms", std::move(terms)}});
  }
  Json j;
  j["ok"] = rep.ok;
  j["theta"] = rat_fraction_str(cert.theta);
  j["delta"] = rat_fraction_str(cert.delta);
  j["start_alpha"] = rat_decimal_str(cert.start_alpha, 7);
  j["start_ok"] = rep.start_ok;
  j["terminal_alpha"] = rat_decimal_str(rep.terminal_alpha, 7);
  j["terminal_ok"] = rep.terminal_ok;
  j["max_recon_diff"] = rat_decimal_str(rep.max_recon_diff, 10);
  j["steps"] = std::move(steps);
  return j;
}

Json bound_comparison_json(const fracparts::BoundComparison& cmp, u64 x, u64 N) {
  Json j;
  j["x"] = x;
  j["N"] = N;
  j["count"] = cmp.count;
  j["term1"] = rat_decimal_str(cmp.term1);
  j["term2"] = rat_decimal_str(cmp.term2);
  j["term3"] = rat_decimal_str(cmp.term3);
  j["ratio"] = rat_decimal_str(cmp.ratio);
  j["hypothesis_ok"] = cmp.hypothesis_ok;
  j["hyp_threshold"] = rat_fraction_str(cmp.hyp_threshold);
  return j;
}

void gap_records_csv(std::ostream& out, const std::vector<sieve::GapRecord>& records) {
  out << "start,gap\n";
  for (const auto& r : records) out << to_string(r.start) << "," << r.gap << "\n";
}

Json gap_records_json(const std::vector<sieve::GapRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records)
    arr.push_back(Json{{"start", to_string(r.start)}, {"gap", r.gap}});
  return arr;
}

void decomposition_csv(std::ostream& out, const census::DecompositionReport& rep) {
  out << "range,count\n";
  out << "S1," << rep.S1 << "\n";
  out << "S2," << rep.S2 << "\n";
  out << "S3," << rep.S3 << "\n";
  out << "S4," << rep.S4 << "\n";
  out << "total_nonsquarefree," << rep.total_nonsquarefree << "\n";
}

void bound_comparison_csv(std::ostream& out, const fracparts::FracCountInstance& inst,
                          const fracparts::BoundComparison& cmp) {
  out << "x,N,delta,count,term1,term2,term3,ratio\n";
  out << inst.x << "," << inst.N << "," << rat_decimal_str(inst.delta_fp, 9) << "," << cmp.count
      << "," << rat_decimal_str(cmp.term1) << "," << rat_decimal_str(cmp.term2) << ","
      << rat_decimal_str(cmp.term3) << "," << rat_decimal_str(cmp.ratio) << "\n";
}

}  // namespace sqf::io
