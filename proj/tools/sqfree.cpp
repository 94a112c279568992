// Command-line front end: sieving and gap records, window censuses, the
// four-range decomposition, identity/expansion verification, fractional-part
// bound comparisons, and chain verification/optimization. Outputs are
// byte-deterministic for a fixed configuration and seed.

#include "sqf/census.hpp"
#include "sqf/chain.hpp"
#include "sqf/fracparts.hpp"
#include "sqf/fuzz.hpp"
#include "sqf/harvest.hpp"
#include "sqf/report_io.hpp"
#include "sqf/sieve.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace sqf;
using io::Json;

struct CommonOpts {
  unsigned threads = 1;
  std::string format = "json";
  std::string out;
  u64 seed = 1;
};

unsigned env_threads() {
  const char* env = std::getenv("SQFREE_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v > 0 ? static_cast<unsigned>(v) : 1;
}

// Writes to --out when given, stdout otherwise.
void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + opts.out);
  f << text;
}

struct ParamArgs {
  u64 x = 0;
  u64 h = 0;  // 0 = derive from C0 x^theta
  std::string C0 = "1";
  u32 L = 10;
  std::string c0 = "0.05";
  std::string theta = "5/26";
  std::string delta = "0.0751";

  GlobalParams build() const {
    return make_params(x, h, parse_rational(C0), L, parse_rational(c0), parse_rational(theta),
                       parse_rational(delta));
  }
};

void add_param_flags(CLI::App* cmd, ParamArgs& pa, bool need_x = true) {
  auto* xo = cmd->add_option("--x", pa.x, "interval left endpoint x");
  if (need_x) xo->required();
  cmd->add_option("--h", pa.h, "interval length h (default floor(C0 x^theta))");
  cmd->add_option("--C0", pa.C0, "constant C0 in h = C0 x^theta");
  cmd->add_option("--L", pa.L, "window parameter L, lambda = 1 + 1/L");
  cmd->add_option("--c0", pa.c0, "small-constant knob (spacing radius / range constant)");
  cmd->add_option("--theta", pa.theta, "exponent theta");
  cmd->add_option("--delta", pa.delta, "exponent delta");
}

int run_gaps(const CommonOpts& opts, u64 limit) {
  std::atomic<u64> last_pct{0};
  auto progress = [&](u128 done, u128 total) {
    // coarse progress to stderr, roughly every 5%
    u64 pct = static_cast<u64>(done * 100 / total);
    u64 prev = last_pct.load();
    while (pct >= prev + 5 || (pct == 100 && prev != 100)) {
      if (last_pct.compare_exchange_weak(prev, pct)) {
        std::cerr << "scanned " << to_string(done) << " / " << to_string(total) << " (" << pct
                  << "%)\n";
        break;
      }
    }
  };
  auto records = sieve::max_gap_scan(limit, opts.threads, progress);
  std::ostringstream os;
  if (opts.format == "csv")
    io::gap_records_csv(os, records);
  else
    os << io::gap_records_json(records).dump(2) << "\n";
  emit(opts, os.str());
  return 0;
}

int run_census(const CommonOpts& opts, const ParamArgs& pa, u64 N_lo, u64 N_hi) {
  GlobalParams params = pa.build();
  if (N_lo == 0) N_lo = params.h + 1;
  if (N_hi == 0) N_hi = static_cast<u64>(2 * isqrt(static_cast<u128>(params.x)));
  Json arr = Json::array();
  auto ends = census::window_endpoints(N_lo, N_hi, params.L);
  for (size_t i = 0; i + 1 < ends.size(); ++i) {
    census::WindowCensus cen = census::census_range(ends[i], ends[i + 1], params);
    Json j = io::census_json(cen, params);
    j["spacing"] = io::spacing_json(census::spacing_check(cen, params.c0));
    j["prebound"] = io::prebound_json(census::prebound_terms(cen, params));
    arr.push_back(std::move(j));
  }
  emit(opts, arr.dump(2) + "\n");
  return 0;
}

int run_decompose(const CommonOpts& opts, const ParamArgs& pa) {
  GlobalParams params = pa.build();
  census::DecompositionReport rep = census::decompose(params, parse_rational(pa.c0));
  std::ostringstream os;
  if (opts.format == "csv") {
    io::decomposition_csv(os, rep);
  } else {
    Json j{{"x", params.x},      {"h", params.h},          {"S1", rep.S1},
           {"S2", rep.S2},       {"S3", rep.S3},           {"S4", rep.S4},
           {"sum", rep.sum()},   {"total_nonsquarefree", rep.total_nonsquarefree},
           {"range_tops", Json{{"t1", rep.t1}, {"t2", rep.t2}, {"t3", rep.t3}, {"t4", rep.t4}}}};
    os << j.dump(2) << "\n";
  }
  emit(opts, os.str());
  return 0;
}

int run_identities(const CommonOpts& opts, u64 samples) {
  Rng rng(opts.seed);
  u64 failures = 0;
  Json checks = Json::object();
  auto record = [&](const char* name, u64 bad) {
    checks[name] = Json{{"samples", samples}, {"failures", bad}};
    failures += bad;
  };

  auto fuzz_pairs = [&](const char* name, auto&& fn, shifts::Direction dir) {
    u64 bad = 0;
    for (u64 i = 0; i < samples; ++i) {
      try {
        if (!fn(fuzz::random_shift_pair(rng, dir))) ++bad;
      } catch (const std::logic_error&) {
        ++bad;
      }
    }
    record(name, bad);
  };
  auto fuzz_quads = [&](const char* name, auto&& fn) {
    u64 bad = 0;
    for (u64 i = 0; i < samples; ++i) {
      try {
        if (!fn(fuzz::random_quadruple(rng))) ++bad;
      } catch (const std::logic_error&) {
        ++bad;
      }
    }
    record(name, bad);
  };

  fuzz_pairs("delta_forward", [](const shifts::ShiftPair& p) {
    return shifts::delta_relation(p).residual == 0;
  }, shifts::Direction::forward);
  fuzz_pairs("delta_backward", [](const shifts::ShiftPair& p) {
    return shifts::delta_relation(p).residual == 0;
  }, shifts::Direction::backward);
  fuzz_pairs("roth_d1_forward", [](const shifts::ShiftPair& p) {
    shifts::roth_d1(p);
    return true;
  }, shifts::Direction::forward);
  fuzz_pairs("roth_d1_backward", [](const shifts::ShiftPair& p) {
    shifts::roth_d1(p);
    return true;
  }, shifts::Direction::backward);
  fuzz_quads("triple_difference", [](const shifts::Quadruple& q) {
    return shifts::triple_difference(q).residual == 0;
  });
  fuzz_quads("roth_d4", [](const shifts::Quadruple& q) {
    shifts::roth_d4(q);
    return true;
  });
  fuzz_quads("ft_dprime", [](const shifts::Quadruple& q) {
    shifts::ft_dprime(q);
    return true;
  });

  Json j{{"seed", opts.seed}, {"samples", samples}, {"failures", failures},
         {"checks", std::move(checks)}};
  emit(opts, j.dump(2) + "\n");
  return failures == 0 ? 0 : 1;
}

int run_expansions(const CommonOpts& opts, const ParamArgs& pa, u64 N_lo, u64 N_hi) {
  GlobalParams params = pa.build();
  if (N_lo == 0) N_lo = params.h + 1;
  if (N_hi == 0) N_hi = static_cast<u64>(2 * isqrt(static_cast<u128>(params.x)));
  harvest::WindowScan scan = harvest::scan_windows(params, N_lo, N_hi);

  const Rat K(10);
  u64 violations = 0;
  Rat max_series_ratio = 0, max_d1_ratio = 0, max_newdiff_ratio = 0;
  auto track = [&](Rat& max_ratio, const Rat& residual, const Rat& bound) {
    Rat mag = residual < 0 ? -residual : residual;
    if (bound == 0) {
      if (mag != 0) ++violations;
      return;
    }
    Rat ratio = mag / bound;
    if (ratio > max_ratio) max_ratio = ratio;
    if (ratio > K) ++violations;
  };

  for (const auto& sample : scan.pairs) {
    const auto& p = sample.pair;
    auto series = shifts::series_expansion_a(p, 5);
    Int n2 = Int(p.n) * p.n;
    track(max_series_ratio, series.residual, series.residual_bound + Rat(Int(params.h), n2));
    auto d1 = shifts::roth_d1(p, params.h);
    track(max_d1_ratio, d1.residual, d1.residual_bound);
  }
  for (const auto& q : scan.quads) {
    auto nd = shifts::new_diff(q);
    track(max_newdiff_ratio, nd.residual, nd.residual_bound);
  }

  Json j{{"x", params.x},
         {"h", params.h},
         {"windows", scan.windows.size()},
         {"pairs", scan.pairs.size()},
         {"quadruples", scan.quads.size()},
         {"K", 10},
         {"max_series_ratio", rat_decimal_str(max_series_ratio)},
         {"max_d1_ratio", rat_decimal_str(max_d1_ratio)},
         {"max_newdiff_ratio", rat_decimal_str(max_newdiff_ratio)},
         {"violations", violations}};
  emit(opts, j.dump(2) + "\n");
  return violations == 0 ? 0 : 1;
}

int run_fracparts(const CommonOpts& opts, const ParamArgs& pa, u64 N, int r, const std::string& k) {
  GlobalParams params = pa.build();
  Rat delta_fp(Int(params.h), Int(N) * N);
  auto inst = fracparts::FracCountInstance::make(params.x, N, delta_fp, r);
  auto cmp = fracparts::ft_bound(inst, parse_rational(k));
  u64 cross = fracparts::exact_count_crossmul(inst);
  std::ostringstream os;
  if (opts.format == "csv") {
    io::bound_comparison_csv(os, inst, cmp);
  } else {
    Json j = io::bound_comparison_json(cmp, inst.x, inst.N);
    j["count_crossmul"] = cross;
    os << j.dump(2) << "\n";
  }
  emit(opts, os.str());
  return cross == cmp.count ? 0 : 1;
}

int run_prop1(const CommonOpts& opts, const ParamArgs& pa) {
  GlobalParams params = pa.build();
  auto rep = fracparts::prop1_report(params, parse_rational(pa.c0));
  Json blocks = Json::array();
  for (const auto& b : rep.blocks)
    blocks.push_back(Json{{"lo", b.lo},
                          {"hi", b.hi},
                          {"sum", b.sum.str()},
                          {"bound", rat_decimal_str(b.bound)}});
  Json j{{"x", params.x},        {"h", params.h},
         {"range_lo", rep.range_lo}, {"range_hi", rep.range_hi},
         {"sum", rep.sum.str()},     {"bound_sum", rat_decimal_str(rep.bound_sum)},
         {"blocks", std::move(blocks)}};
  emit(opts, j.dump(2) + "\n");
  return 0;
}

int run_chain_verify(const CommonOpts& opts, const std::string& file, const std::string& theta,
                     const std::string& delta) {
  chain::ChainCertificate cert;
  if (file.empty()) {
    cert = chain::reference_chain();
  } else {
    std::ifstream f(file);
    if (!f) throw std::runtime_error("cannot open chain file: " + file);
    cert = chain::load_chain_csv(f, parse_rational(theta), parse_rational(delta));
  }
  chain::ChainReport rep = chain::verify_chain(cert);
  emit(opts, io::chain_report_json(rep, cert).dump(2) + "\n");
  return rep.ok ? 0 : 1;
}

int run_chain_optimize(const CommonOpts& opts, const std::string& start, const std::string& target,
                       const std::string& theta, const std::string& delta) {
  Rat th = parse_rational(theta);
  Rat de = parse_rational(delta);
  Rat start_alpha = start.empty() ? chain::start_alpha_target(th) : parse_rational(start);
  Rat target_alpha = target.empty() ? chain::terminal_alpha_target(th) : parse_rational(target);
  auto res = chain::optimize_chain(start_alpha, target_alpha, th, de);
  Json j;
  j["reached_target"] = res.reached_target;
  j["stalled"] = res.stalled;
  if (res.stalled) j["stall_alpha"] = rat_decimal_str(res.stall_alpha, 7);
  if (!res.stalled) {
    chain::ChainReport rep = chain::verify_chain(res.cert);
    j["verify"] = io::chain_report_json(rep, res.cert);
    std::ostringstream csv;
    chain::write_chain_csv(csv, res.cert);
    j["certificate_csv"] = csv.str();
  }
  emit(opts, j.dump(2) + "\n");
  return res.reached_target ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squarefree gap toolkit"};
  app.set_help_flag("--help", "print help and exit");  // frees --h for the interval length
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts opts;
  opts.threads = env_threads();
  app.add_option("--threads", opts.threads, "worker threads (default SQFREE_THREADS or 1)");
  app.add_option("--format", opts.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", opts.out, "output path (default stdout)");
  app.add_option("--seed", opts.seed, "seed for randomized verification");

  // sieve
  auto* sieve_cmd = app.add_subcommand("sieve", "squarefree sieving");
  sieve_cmd->require_subcommand(1);
  u64 limit = 0, sieve_x = 0;
  auto* gaps_cmd = sieve_cmd->add_subcommand("gaps", "maximal gap records up to --limit");
  gaps_cmd->add_option("--limit", limit, "scan limit")->required();
  auto* count_cmd = sieve_cmd->add_subcommand("count", "count squarefree numbers up to --limit");
  count_cmd->add_option("--limit", limit, "count limit")->required();
  auto* next_cmd = sieve_cmd->add_subcommand("next", "least squarefree number above --x");
  next_cmd->add_option("--x", sieve_x, "starting point")->required();

  // census
  ParamArgs census_pa;
  u64 N_lo = 0, N_hi = 0;
  auto* census_cmd = app.add_subcommand("census", "window membership censuses");
  add_param_flags(census_cmd, census_pa);
  census_cmd->add_option("--N-lo", N_lo, "first window endpoint (default h+1)");
  census_cmd->add_option("--N-hi", N_hi, "last window endpoint (default 2 sqrt x)");

  // decompose
  ParamArgs dec_pa;
  dec_pa.c0 = "0.1";  // range constant c of the four-range split
  auto* dec_cmd = app.add_subcommand("decompose", "four-range prime decomposition");
  add_param_flags(dec_cmd, dec_pa);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "exact identity / expansion verification");
  verify_cmd->require_subcommand(1);
  u64 samples = 100000;
  auto* ident_cmd = verify_cmd->add_subcommand("identities", "polynomial identity fuzz");
  ident_cmd->add_option("--samples", samples, "samples per identity");
  ParamArgs exp_pa;
  u64 exp_N_lo = 0, exp_N_hi = 0;
  auto* exp_cmd = verify_cmd->add_subcommand("expansions", "residual bounds on harvested pairs");
  add_param_flags(exp_cmd, exp_pa);
  exp_cmd->add_option("--N-lo", exp_N_lo, "first window endpoint (default h+1)");
  exp_cmd->add_option("--N-hi", exp_N_hi, "last window endpoint (default 2 sqrt x)");

  // fracparts
  ParamArgs fp_pa;
  u64 fp_N = 0;
  int fp_r = 4;
  std::string fp_k = "1";
  auto* fp_cmd = app.add_subcommand("fracparts", "fractional-part counts vs bound");
  add_param_flags(fp_cmd, fp_pa, /*need_x=*/false);  // required unless the prop1 mode runs
  fp_cmd->add_option("--N", fp_N, "window start, counting over (N, 2N]");
  fp_cmd->add_option("--r", fp_r, "derivative order r");
  fp_cmd->add_option("--k", fp_k, "hypothesis constant k");
  ParamArgs p1_pa;
  p1_pa.c0 = "0.1";
  auto* p1_cmd = fp_cmd->add_subcommand("prop1", "dyadic-block sum over the small-n range");
  add_param_flags(p1_cmd, p1_pa);

  // chain
  auto* chain_cmd = app.add_subcommand("chain", "exponent chain verification / optimization");
  chain_cmd->require_subcommand(1);
  std::string chain_file, chain_theta = "5/26", chain_delta = "0.0751";
  std::string chain_start, chain_target;
  auto* cv_cmd = chain_cmd->add_subcommand("verify", "verify a chain certificate CSV");
  cv_cmd->add_option("--file", chain_file, "certificate CSV (default: built-in 22-step chain)");
  cv_cmd->add_option("--theta", chain_theta, "exponent theta");
  cv_cmd->add_option("--delta", chain_delta, "exponent delta");
  auto* co_cmd = chain_cmd->add_subcommand("optimize", "greedy descent from --start to --target");
  co_cmd->add_option("--start", chain_start, "start exponent (default 2/3 - 5 theta/3)");
  co_cmd->add_option("--target", chain_target, "target exponent (default 5 theta/2 - 1/4)");
  co_cmd->add_option("--theta", chain_theta, "exponent theta");
  co_cmd->add_option("--delta", chain_delta, "exponent delta");
  auto* cf_cmd = chain_cmd->add_subcommand("fixture", "emit the built-in 22-step chain as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help is fine, any usage problem exits 2
  }

  try {
    if (gaps_cmd->parsed()) return run_gaps(opts, limit);
    if (count_cmd->parsed()) {
      emit(opts, to_string(sieve::count_squarefree_upto(limit, opts.threads)) + "\n");
      return 0;
    }
    if (next_cmd->parsed()) {
      emit(opts, to_string(sieve::next_squarefree(sieve_x)) + "\n");
      return 0;
    }
    if (census_cmd->parsed()) return run_census(opts, census_pa, N_lo, N_hi);
    if (dec_cmd->parsed()) return run_decompose(opts, dec_pa);
    if (ident_cmd->parsed()) return run_identities(opts, samples);
    if (exp_cmd->parsed()) return run_expansions(opts, exp_pa, exp_N_lo, exp_N_hi);
    if (p1_cmd->parsed()) return run_prop1(opts, p1_pa);
    if (fp_cmd->parsed()) {
      if (fp_pa.x == 0 || fp_N == 0)
        throw CLI::ValidationError("fracparts", "--x and --N are required");
      return run_fracparts(opts, fp_pa, fp_N, fp_r, fp_k);
    }
    if (cv_cmd->parsed()) return run_chain_verify(opts, chain_file, chain_theta, chain_delta);
    if (co_cmd->parsed())
      return run_chain_optimize(opts, chain_start, chain_target, chain_theta, chain_delta);
    if (cf_cmd->parsed()) {
      std::ostringstream os;
      chain::write_chain_csv(os, chain::reference_chain());
      emit(opts, os.str());
      return 0;
    }
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
