#include "sqf/chain.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace sqf::chain {

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::B1: return "B1";
    case Branch::B2: return "B2";
    case Branch::B3: return "B3";
  }
  return "?";
}

Branch parse_branch(std::string_view s) {
  if (s == "B1" || s == "b1" || s == "1") return Branch::B1;
  if (s == "B2" || s == "b2" || s == "2") return Branch::B2;
  if (s == "B3" || s == "b3" || s == "3") return Branch::B3;
  throw std::invalid_argument("unknown branch token: " + std::string(s));
}

Rat next_alpha_formula(const Rat& beta, Branch branch, const Rat& /*theta*/, const Rat& delta) {
  Rat den;
  Rat num = 1;
  switch (branch) {
    case Branch::B1: den = 4 - beta; break;
    case Branch::B2: num = 5; den = 23 - 9 * beta; break;
    case Branch::B3: den = Rat(27, 5) - 3 * beta - 2 * delta; break;
  }
  if (den <= 0) throw std::domain_error("next_alpha_formula: non-positive denominator");
  return num / den;
}

Rat feasibility_margin(const Rat& alpha, const Rat& beta, const Rat& theta) {
  if (alpha <= 0) throw std::domain_error("feasibility_margin: alpha must be positive");
  return beta - (2 - (1 - theta) / (2 * alpha));
}

bool feasible(const Rat& alpha, const Rat& beta, const Rat& theta) {
  return beta < 1 && feasibility_margin(alpha, beta, theta) > 0;
}

Rat start_alpha_target(const Rat& theta) { return Rat(2, 3) - 5 * theta / 3; }
Rat terminal_alpha_target(const Rat& theta) { return 5 * theta / 2 - Rat(1, 4); }

ErrorTermProfile error_term_profile(const Rat& alpha_lo, const Rat& alpha_hi, const Rat& beta,
                                    const Rat& theta, const Rat& delta) {
  if (alpha_lo > alpha_hi) throw std::invalid_argument("error_term_profile: alpha_lo > alpha_hi");
  auto exps = [&](const Rat& a) -> std::array<Rat, 5> {
    return {
        a - theta,
        Rat(1, 4) - a / 4,
        theta + Rat(1, 3) - a * (Rat(7, 5) + 4 * delta / 3),
        1 - a * (Rat(16, 5) + 4 * delta),
        theta + a * (4 - 2 * beta) - (1 - theta),
    };
  };
  static const char* kNames[5] = {"N/h", "x^1/4 / (L N^1/4)", "h x^1/3 / N^(7/5+4d/3)",
                                  "x / N^(16/5+4d)", "h N^(4-2b) / (L x^(1-t))"};
  static const bool kLWeighted[5] = {false, true, false, false, true};
  auto lo = exps(alpha_lo), hi = exps(alpha_hi);
  ErrorTermProfile profile;
  profile.all_ok = true;
  for (int i = 0; i < 5; ++i) {
    ErrorTerm& t = profile.terms[i];
    t.name = kNames[i];
    t.l_weighted = kLWeighted[i];
    t.exp_lo = lo[i];
    t.exp_hi = hi[i];
    Rat worst = t.exp_lo > t.exp_hi ? t.exp_lo : t.exp_hi;
    t.ok = t.l_weighted ? worst <= theta : worst < theta;
    t.at_l_margin = t.l_weighted && worst == theta;
    profile.all_ok = profile.all_ok && t.ok;
  }
  return profile;
}

ChainReport verify_chain(const ChainCertificate& cert, const Rat& recon_tol) {
  ChainReport rep;
  const Rat terminal_target = terminal_alpha_target(cert.theta);
  rep.start_ok = cert.start_alpha >= start_alpha_target(cert.theta);
  rep.terminal_alpha = cert.steps.empty() ? cert.start_alpha : cert.terminal_alpha;
  rep.terminal_ok = rep.terminal_alpha <= terminal_target;
  bool all = true;
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const ChainStep& s = cert.steps[i];
    StepReport sr;
    sr.feasibility_margin = feasibility_margin(s.alpha, s.beta, cert.theta);
    sr.feasible = s.beta < 1 && sr.feasibility_margin > 0;
    sr.computed_next = next_alpha_formula(s.beta, s.branch, cert.theta, cert.delta);
    sr.recon_diff = s.next_alpha - sr.computed_next;
    Rat diff_abs = sr.recon_diff < 0 ? -sr.recon_diff : sr.recon_diff;
    sr.reconciled = diff_abs <= recon_tol;
    if (diff_abs > rep.max_recon_diff) rep.max_recon_diff = diff_abs;
    sr.continuity = i + 1 < cert.steps.size() ? cert.steps[i + 1].alpha == s.next_alpha : true;
    // The covered window bottoms out at the terminal handoff exponent.
    Rat lo = s.next_alpha > terminal_target ? s.next_alpha : terminal_target;
    if (lo > s.alpha) lo = s.alpha;
    sr.profile = error_term_profile(lo, s.alpha, s.beta, cert.theta, cert.delta);
    sr.error_terms_ok = sr.profile.all_ok;
    sr.branch_dominant = true;
    for (Branch b : {Branch::B1, Branch::B2, Branch::B3}) {
      if (b == s.branch) continue;
      if (next_alpha_formula(s.beta, b, cert.theta, cert.delta) < sr.computed_next)
        sr.branch_dominant = false;
    }
    bool progress = s.next_alpha < s.alpha;
    all = all && sr.feasible && sr.continuity && sr.reconciled && sr.error_terms_ok &&
          sr.branch_dominant && progress;
    rep.steps.push_back(std::move(sr));
  }
  // start_ok is informational; the verification contract is the per-step
  // checks plus the terminal handoff.
  rep.ok = all && rep.terminal_ok;
  return rep;
}

OptimizeResult optimize_chain(const Rat& start_alpha, const Rat& target_alpha, const Rat& theta,
                              const Rat& delta, const Rat& beta_grid_step) {
  if (start_alpha < target_alpha)
    throw std::invalid_argument("optimize_chain: start must be >= target");
  OptimizeResult res;
  res.cert.theta = theta;
  res.cert.delta = delta;
  res.cert.start_alpha = start_alpha;
  res.cert.terminal_alpha = start_alpha;
  const Rat refine = beta_grid_step / 100;
  const Rat progress_eps(1, 1000000);
  constexpr int kMaxSteps = 1000;

  Rat alpha = start_alpha;
  while (alpha > target_alpha && static_cast<int>(res.cert.steps.size()) < kMaxSteps) {
    Rat thr = 2 - (1 - theta) / (2 * alpha);
    Rat lo = thr > 0 ? thr : Rat(0);
    bool found = false;
    Rat best_val, best_beta;
    Branch best_branch = Branch::B1;
    auto consider = [&](const Rat& beta) {
      if (beta <= thr || beta >= 1) return;
      for (Branch b : {Branch::B1, Branch::B2, Branch::B3}) {
        Rat v = next_alpha_formula(beta, b, theta, delta);
        if (!found || v < best_val) {
          found = true;
          best_val = v;
          best_beta = beta;
          best_branch = b;
        }
      }
    };
    // Coarse grid over (threshold, 1), then refinement just above the
    // threshold where every branch exponent is smallest.
    Int k0 = rat_num(lo / beta_grid_step) / rat_den(lo / beta_grid_step);
    for (Int k = k0 + 1; Rat(k) * beta_grid_step < 1; ++k) consider(Rat(k) * beta_grid_step);
    Int j0 = rat_num(lo / refine) / rat_den(lo / refine);
    for (Int j = j0 + 1; j <= j0 + 100; ++j) {
      Rat beta = Rat(j) * refine;
      if (beta >= 1) break;
      consider(beta);
    }
    if (!found || best_val >= alpha - progress_eps) {
      res.stalled = true;
      res.stall_alpha = alpha;
      return res;
    }
    res.cert.steps.push_back({alpha, best_beta, best_branch, best_val});
    alpha = best_val;
    res.cert.terminal_alpha = alpha;
  }
  res.reached_target = alpha <= target_alpha;
  return res;
}

namespace {

struct FixtureRow {
  const char* alpha;
  const char* beta;
  Branch branch;
};

// The published descent from x^{9/26} to x^{3/13}; each printed alpha is the
// preceding branch value rounded up to four decimals.
constexpr FixtureRow kReferenceRows[] = {
    {"0.34616", "0.8334", Branch::B1}, {"0.3158", "0.7212", Branch::B2},
    {"0.3029", "0.6668", Branch::B2},  {"0.2942", "0.6274", Branch::B2},
    {"0.2882", "0.5988", Branch::B2},  {"0.2840", "0.5781", Branch::B2},
    {"0.2810", "0.5629", Branch::B2},  {"0.2789", "0.5521", Branch::B2},
    {"0.2773", "0.5437", Branch::B2},  {"0.2762", "0.5379", Branch::B3},
    {"0.2751", "0.5321", Branch::B3},  {"0.2738", "0.5251", Branch::B3},
    {"0.2722", "0.5164", Branch::B3},  {"0.2703", "0.5060", Branch::B3},
    {"0.2680", "0.4932", Branch::B3},  {"0.2653", "0.4778", Branch::B3},
    {"0.2621", "0.4592", Branch::B3},  {"0.2583", "0.4366", Branch::B3},
    {"0.2539", "0.4095", Branch::B3},  {"0.2487", "0.3762", Branch::B3},
    {"0.2427", "0.3361", Branch::B3},  {"0.2358", "0.2874", Branch::B3},
};

ChainCertificate build_certificate(std::vector<ChainStep> steps, const Rat& theta,
                                   const Rat& delta) {
  ChainCertificate cert;
  cert.theta = theta;
  cert.delta = delta;
  for (size_t i = 0; i + 1 < steps.size(); ++i) steps[i].next_alpha = steps[i + 1].alpha;
  if (!steps.empty()) {
    ChainStep& last = steps.back();
    last.next_alpha = next_alpha_formula(last.beta, last.branch, theta, delta);
    cert.start_alpha = steps.front().alpha;
    cert.terminal_alpha = last.next_alpha;
  }
  cert.steps = std::move(steps);
  return cert;
}

}  // namespace

ChainCertificate reference_chain() {
  std::vector<ChainStep> steps;
  for (const FixtureRow& row : kReferenceRows)
    steps.push_back({parse_rational(row.alpha), parse_rational(row.beta), row.branch, 0});
  return build_certificate(std::move(steps), Rat(5, 26), Rat(751, 10000));
}

ChainCertificate load_chain_csv(std::istream& in, const Rat& theta, const Rat& delta) {
  std::vector<ChainStep> steps;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#' || line.rfind("alpha", 0) == 0) continue;
    std::istringstream row(line);
    std::string alpha, beta, branch;
    if (!std::getline(row, alpha, ',') || !std::getline(row, beta, ',') ||
        !std::getline(row, branch, ','))
      throw std::invalid_argument("chain csv: expected alpha,beta,branch: " + line);
    steps.push_back({parse_rational(alpha), parse_rational(beta), parse_branch(branch), 0});
  }
  if (steps.empty()) throw std::invalid_argument("chain csv: no steps");
  return build_certificate(std::move(steps), theta, delta);
}

void write_chain_csv(std::ostream& out, const ChainCertificate& cert) {
  out << "alpha,beta,branch\n";
  for (const ChainStep& s : cert.steps)
    out << rat_decimal_str(s.alpha, 10) << "," << rat_decimal_str(s.beta, 10) << ","
        << branch_name(s.branch) << "\n";
}

}  // namespace sqf::chain
