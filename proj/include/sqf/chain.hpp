// Exact-rational replay, verification and greedy optimization of the
// window-exponent recursion: each step takes the admissible window top
// N <= C x^alpha down to the selected branch exponent, subject to the
// feasibility constraint 2 - (1-theta)/(2 alpha) < beta < 1 and to the
// five error-term exponents staying below theta across the window.
#pragma once

#include "sqf/numeric.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace sqf::chain {

enum class Branch { B1 = 1, B2 = 2, B3 = 3 };

const char* branch_name(Branch b);
Branch parse_branch(std::string_view s);

struct ChainStep {
  Rat alpha = 0;   // current window top exponent
  Rat beta = 0;
  Branch branch = Branch::B1;
  Rat next_alpha = 0;  // exponent of the selected lower bound
};

struct ChainCertificate {
  Rat theta = Rat(5, 26);
  Rat delta = Rat(751, 10000);
  std::vector<ChainStep> steps;
  Rat start_alpha = 0;
  Rat terminal_alpha = 0;
};

// Branch exponents: 1/(4-beta), 5/(23-9 beta), 1/(27/5 - 3 beta - 2 delta).
Rat next_alpha_formula(const Rat& beta, Branch branch, const Rat& theta, const Rat& delta);

// Exact check of 2 - (1-theta)/(2 alpha) < beta < 1.
bool feasible(const Rat& alpha, const Rat& beta, const Rat& theta);
Rat feasibility_margin(const Rat& alpha, const Rat& beta, const Rat& theta);

// Chain endpoints implied by theta: the upper window exponent 2/3 - 5 theta/3
// and the lower handoff exponent 5 theta/2 - 1/4.
Rat start_alpha_target(const Rat& theta);
Rat terminal_alpha_target(const Rat& theta);

struct ErrorTerm {
  std::string name;
  bool l_weighted = false;  // carries a 1/L factor; exponent == theta allowed
  Rat exp_lo = 0, exp_hi = 0;  // x-exponents at the two alpha endpoints
  bool ok = false;
  bool at_l_margin = false;  // exponent equals theta exactly, absorbed by 1/L
};

struct ErrorTermProfile {
  std::array<ErrorTerm, 5> terms;
  bool all_ok = false;
};

// Exponents of N/h, x^{1/4}/(L N^{1/4}), h x^{1/3}/N^{7/5+4delta/3},
// x/N^{16/5+4delta}, h N^{4-2beta}/(L x^{1-theta}) at both alpha endpoints.
ErrorTermProfile error_term_profile(const Rat& alpha_lo, const Rat& alpha_hi, const Rat& beta,
                                    const Rat& theta, const Rat& delta);

struct StepReport {
  bool feasible = false;
  Rat feasibility_margin = 0;
  bool continuity = false;      // next step's alpha equals this next_alpha
  bool reconciled = false;      // |next_alpha - formula(beta, branch)| <= tolerance
  Rat recon_diff = 0;           // next_alpha - formula value, exact
  Rat computed_next = 0;
  bool error_terms_ok = false;
  bool branch_dominant = false;  // chosen branch attains the minimum exponent
  ErrorTermProfile profile;
};

struct ChainReport {
  bool ok = false;
  bool start_ok = false;     // start_alpha >= 2/3 - 5 theta/3
  bool terminal_ok = false;  // terminal_alpha <= 5 theta/2 - 1/4
  Rat terminal_alpha = 0;
  Rat max_recon_diff = 0;
  std::vector<StepReport> steps;
};

// recon_tol defaults to 1e-4: printed exponents are the exact branch values
// rounded up to four decimals, so the gap lies in [0, 1e-4).
ChainReport verify_chain(const ChainCertificate& cert, const Rat& recon_tol = Rat(1, 10000));

struct OptimizeResult {
  ChainCertificate cert;
  bool reached_target = false;
  bool stalled = false;
  Rat stall_alpha = 0;
};

// Greedy descent: per step scan the beta grid (with 1e-6 refinement near the
// feasibility threshold), take the branch minimizing the next exponent, stop
// at the target or on no progress.
OptimizeResult optimize_chain(const Rat& start_alpha, const Rat& target_alpha, const Rat& theta,
                              const Rat& delta, const Rat& beta_grid_step = Rat(1, 10000));

// The published 22-step certificate bridging x^{9/26} down to x^{3/13}.
ChainCertificate reference_chain();

// CSV rows "alpha,beta,branch"; next_alpha is the following row's alpha and,
// for the last row, the exact branch value.
ChainCertificate load_chain_csv(std::istream& in, const Rat& theta = Rat(5, 26),
                                const Rat& delta = Rat(751, 10000));
void write_chain_csv(std::ostream& out, const ChainCertificate& cert);

}  // namespace sqf::chain
