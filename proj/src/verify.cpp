#include "zetagap/verify.hpp"

#include "zetagap/bounds.hpp"
#include "zetagap/cache.hpp"
#include "zetagap/moments.hpp"
#include "zetagap/opial.hpp"
#include "zetagap/ratios.hpp"
#include "zetagap/zfunction.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

namespace zetagap {

std::string to_string(VerifySuite s) {
  switch (s) {
    case VerifySuite::quick: return "quick";
    case VerifySuite::paper: return "paper";
    case VerifySuite::longrun: return "long";
  }
  return "?";
}

bool VerifyReport::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass && !c.skipped) return false;
  return true;
}

namespace {

// High-precision Z reference values at the spot ordinates of criterion 8.
constexpr double kZref50 = -0.34073500595502498;
constexpr double kZref500 = 1.4724478510550853;
constexpr double kZref5000 = -0.80425723635293985;
constexpr double kFirstZero = 14.134725141734695;

struct Checker {
  CriterionResult result;
  explicit Checker(int number, std::string title) {
    result.number = number;
    result.title = std::move(title);
    result.pass = true;
  }
  void check(bool ok, const std::string& line) {
    result.pass = result.pass && ok;
    result.details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  }
  void note(const std::string& line) { result.details.push_back("     " + line); }
};

std::string fmt(double v, int prec = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

std::string abs_diff_line(const std::string& what, double got, double want, double tol) {
  std::ostringstream os;
  os << what << ": computed " << fmt(got) << ", target " << fmt(want, 6) << ", |diff| "
     << fmt(std::fabs(got - want), 3) << ", tol " << fmt(tol, 3);
  return os.str();
}

CriterionResult criterion1(const VerifyContext& ctx, int kmax) {
  Checker c(1, "Opial constants L(2,2), K(2,2,4), K(1,k)");
  const LValue L = L_pq(2, 2);
  c.check(std::fabs(L.value - ctx.fixtures.constants.at("L22")) <= 1e-3,
          abs_diff_line("L(2,2)", L.value, ctx.fixtures.constants.at("L22"), 1e-3));
  const double K224 = K_conjugate(2, 2);
  c.check(std::fabs(K224 - ctx.fixtures.constants.at("K224")) <= 1e-4,
          abs_diff_line("K(2,2,4)", K224, ctx.fixtures.constants.at("K224"), 1e-4));
  for (int k = 2; k <= kmax; ++k) {
    const double got = K_mixed_paper(1, k);
    const double want = ctx.fixtures.k_mixed_decimals.at(k);
    c.check(std::fabs(got - want) <= 1e-4,
            abs_diff_line("K(1," + std::to_string(k) + ")", got, want, 1e-4));
  }
  return c.result;
}

CriterionResult criterion2(int kmax) {
  Checker c(2, "Boyd q=0 reduction matches A(k)");
  for (int k = 1; k <= kmax; ++k) {
    const BoydBreakdown b = boyd_K({2.0 * k, 0.0, 2.0 * k});
    const double root = std::pow(b.K_value, 1.0 / (2.0 * k));
    const double a = A_of_k(k);
    c.check(std::fabs(root - a) <= 1e-6,
            abs_diff_line("boyd_K(" + std::to_string(2 * k) + ",0," + std::to_string(2 * k) +
                              ")^(1/" + std::to_string(2 * k) + ") vs A(" + std::to_string(k) + ")",
                          root, a, 1e-6));
  }
  return c.result;
}

CriterionResult criterion3(const VerifyContext& ctx) {
  Checker c(3, "Gamma constants: Table of A(k), k=1..15");
  for (int k = 1; k <= 15; ++k) {
    const double got = A_of_k(k);
    const double want = ctx.fixtures.a_decimals.at(k);
    c.check(std::fabs(got - want) <= 1e-4,
            abs_diff_line("A(" + std::to_string(k) + ")", got, want, 1e-4));
  }
  return c.result;
}

CriterionResult criterion4(const VerifyContext& ctx, int kmax) {
  Checker c(4, "Exact moment constants b(1,k), b(k,k) vs printed table");
  for (int k = 2; k <= kmax; ++k) {
    for (int h : {1, k}) {
      const ExactRational got = b_mixed(h, k);
      const ExactRational& want = ctx.fixtures.b_values.at({h, k});
      const bool ok = got == want;
      std::string line = "b(" + std::to_string(h) + "," + std::to_string(k) + ")";
      line += ok ? ": exact match" : ": MISMATCH, recomputed " + got.to_string() +
                                         " vs printed " + want.to_string();
      c.check(ok, line);
    }
  }
  return c.result;
}

CriterionResult criterion5(const VerifyContext& ctx, int kmax, bool recompute_9_10,
                           int threads) {
  Checker c(5, "CRS constants: interpretation lock-in and exact ratios");
  try {
    const LockInResult lock = interpretation_lock_in();
    const bool expected = lock.order_mode == OrderMode::ordered &&
                          lock.m_range == MRange::i_lt_j_1k;
    c.check(expected, "lock-in unique candidate: " + to_string(lock.order_mode) + " / " +
                          to_string(lock.m_range));
  } catch (const std::exception& e) {
    c.check(false, std::string("lock-in failed: ") + e.what());
    return c.result;
  }
  CkOptions opts;
  opts.threads = threads;
  for (int k = 1; k <= kmax; ++k) {
    const ExactRational got = ratio_b_over_c(k, opts);
    const bool ok = got == ctx.fixtures.ratios.at(k);
    c.check(ok, "b(" + std::to_string(k) + ")/c(" + std::to_string(k) + ")" +
                    (ok ? ": exact match" : ": MISMATCH, recomputed " + got.to_string()));
  }
  if (recompute_9_10) {
    CkOptions long_opts;
    long_opts.threads = threads;
    for (int k : {9, 10}) {
      const ExactRational got = ratio_b_over_c(k, long_opts);
      const bool ok = got == ctx.fixtures.ratios.at(k);
      c.check(ok, "b(" + std::to_string(k) + ")/c(" + std::to_string(k) + ") recomputed" +
                      (ok ? ": exact match" : ": MISMATCH " + got.to_string()));
    }
  }
  return c.result;
}

CriterionResult criterion6(VerifyContext& ctx, int kmax_mixed, bool full_table) {
  Checker c(6, "Lower bounds for Lambda");
  const auto& consts = ctx.fixtures.constants;
  const BoundResult w = lambda_wirtinger_unconditional();
  c.check(std::fabs(w.value - consts.at("wirtinger")) <= 1e-3,
          abs_diff_line("wirtinger unconditional", w.value, consts.at("wirtinger"), 1e-3));
  const BoundResult b = lambda_boyd_unconditional();
  c.check(std::fabs(b.value - consts.at("boyd")) <= 1e-3,
          abs_diff_line("boyd unconditional", b.value, consts.at("boyd"), 1e-3));
  for (int k = 2; k <= kmax_mixed; ++k) {
    const BoundResult m = lambda_mixed(1, k, MixedVariant::paper);
    const double want = ctx.fixtures.bounds_mixed_decimals.at(k);
    c.check(std::fabs(m.value - want) <= 1e-3,
            abs_diff_line("mixed bound (1," + std::to_string(k) + ")", m.value, want, 1e-3));
  }
  RatioSource ratios(ctx.fixtures, ctx.cache_dir, ctx.threads);
  const int kmax_full = full_table ? 15 : kmax_mixed;
  for (int k = 1; k <= kmax_full; ++k) {
    const ResolvedRatio rr = ratios.resolve(k);
    const BoundResult f = lambda_full(k, rr.value, rr.provenance);
    const double want = ctx.fixtures.bounds_full_decimals.at(k);
    c.check(std::fabs(f.value - want) <= 1e-3,
            abs_diff_line("full bound Lambda(" + std::to_string(k) + ") [" + rr.provenance + "]",
                          f.value, want, 1e-3));
  }
  if (full_table) {
    const ResolvedRatio rr = ratios.resolve(15);
    const BoundResult f = lambda_full(15, rr.value, rr.provenance);
    c.check(std::fabs(f.value - consts.at("headline")) <= 1e-3,
            abs_diff_line("headline Lambda(15)", f.value, consts.at("headline"), 1e-3));
  }
  const BoundResult hall = hall_reference();
  c.check(std::fabs(hall.value - consts.at("hall")) <= 1e-4,
          abs_diff_line("hall reference", hall.value, consts.at("hall"), 1e-4));
  return c.result;
}

CriterionResult criterion7(const VerifyContext& ctx) {
  Checker c(7, "Audit: the two K(h,k) readings disagree, both reproduced");
  const double paper = K_mixed_paper(1, 2);
  const double derived = K_mixed_derived(1, 2);
  c.check(std::fabs(paper - ctx.fixtures.k_mixed_decimals.at(2)) <= 1e-4,
          abs_diff_line("K_mixed_paper(1,2)", paper, ctx.fixtures.k_mixed_decimals.at(2), 1e-4));
  c.check(std::fabs(derived - ctx.fixtures.constants.at("K224")) <= 1e-4,
          abs_diff_line("K_mixed_derived(1,2)", derived, ctx.fixtures.constants.at("K224"), 1e-4));
  c.check(std::fabs(paper - derived) > 0.05,
          "the two variants differ: " + fmt(paper) + " vs " + fmt(derived));
  return c.result;
}

CriterionResult criterion8(bool include_thousand, bool include_moment) {
  Checker c(8, "Z-function lab statistics (finite-range, not bounds)");
  ScanConfig cfg;
  cfg.t_start = 10;
  cfg.t_end = 100;
  ScanResult scan = scan_zeros(cfg);
  c.check(scan.records.size() == 29,
          "zeros in [10,100]: found " + std::to_string(scan.records.size()) + ", expected 29");
  if (!scan.records.empty()) {
    const double first = scan.records.front().ordinate;
    c.check(std::fabs(first - 14.1347) <= 1e-3,
            abs_diff_line("first ordinate", first, 14.1347, 1e-3));
  }
  for (const auto& [t, ref] : {std::pair{50.0, kZref50}, {500.0, kZref500}, {5000.0, kZref5000}}) {
    const double z = hardy_z(t);
    c.check(std::fabs(z - ref) <= 1e-5,
            abs_diff_line("Z(" + fmt(t, 6) + ") vs high-precision reference", z, ref, 1e-5));
  }
  if (include_thousand) {
    ScanConfig big;
    big.t_start = 10;
    big.t_end = 1422;  // past the 1001st zero
    big.grid_points_per_mean_spacing = 32;  // leaves no close pair unresolved here
    ScanResult all = scan_zeros(big);
    c.check(all.records.size() >= 1001, "scan to t=1422 found " +
                                            std::to_string(all.records.size()) +
                                            " zeros (need >= 1001)");
    if (all.records.size() >= 1001) {
      std::vector<ZeroRecord> first1000(all.records.begin(), all.records.begin() + 1000);
      first1000.back().gap.reset();
      first1000.back().normalized_gap.reset();
      const double mean = mean_normalized_gap(first1000);
      c.check(std::fabs(mean - 1.0) <= 0.05,
              abs_diff_line("mean normalized gap, first 1000 zeros", mean, 1.0, 0.05));
    }
    c.check(scan.coverage_warnings.empty() && all.coverage_warnings.empty(),
            "no coverage gaps reported");
  } else {
    c.note("1000-zero statistics: run with suite=paper or suite=long");
  }
  if (include_moment) {
    const MomentEstimate m = moment_integral(MomentKind::Z4, 1e5);
    c.check(m.ratio >= 0.4 && m.ratio <= 2.5,
            "moment Z4 at T=1e5: ratio to leading term " + fmt(m.ratio, 6) +
                " within [0.4, 2.5] (error terms are one log-power down)");
  } else {
    c.note("Z4 moment at T=1e5: gated behind --long (suite=long)");
  }
  return c.result;
}

std::string capture_command_stdout(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
  return out;
}

CriterionResult criterion9(const VerifyContext& ctx) {
  Checker c(9, "Determinism of verify --suite quick");
  if (ctx.cli_path.empty()) {
    c.result.skipped = true;
    c.note("no CLI binary path supplied; run from the CLI or the acceptance suite");
    return c.result;
  }
  const std::string cmd = "'" + ctx.cli_path + "' verify --suite quick 2>/dev/null";
  const std::string run1 = capture_command_stdout(cmd);
  const std::string run2 = capture_command_stdout(cmd);
  c.check(!run1.empty() && run1 == run2,
          "two consecutive runs byte-identical (" + std::to_string(run1.size()) + " bytes)");
  return c.result;
}

}  // namespace

CriterionResult run_criterion(int number, VerifySuite suite, VerifyContext& ctx) {
  const bool quick = suite == VerifySuite::quick;
  const bool longrun = suite == VerifySuite::longrun;
  const int kmax_small = quick ? 5 : 7;    // tables indexed 2..7
  const int kmax_ratios = quick ? 5 : 8;   // exact ratio checks

  switch (number) {
    case 1: return criterion1(ctx, kmax_small);
    case 2: return criterion2(quick ? 5 : 8);
    case 3: return criterion3(ctx);
    case 4: return criterion4(ctx, kmax_small);
    case 5: return criterion5(ctx, kmax_ratios, longrun, ctx.threads);
    case 6: return criterion6(ctx, kmax_small, !quick);
    case 7: return criterion7(ctx);
    case 8: return criterion8(!quick, longrun);
    case 9:
      if (quick) {
        CriterionResult c9;
        c9.number = 9;
        c9.title = "Determinism of verify --suite quick";
        c9.skipped = true;
        c9.pass = true;
        c9.details.push_back("     checked externally (suite=paper/long rerun this suite twice)");
        return c9;
      }
      return criterion9(ctx);
    default:
      throw std::invalid_argument("run_criterion: number must be 1..9");
  }
}

VerifyReport run_verify_suite(VerifySuite suite, VerifyContext& ctx) {
  VerifyReport report;
  report.suite = suite;
  for (int n = 1; n <= 9; ++n) report.criteria.push_back(run_criterion(n, suite, ctx));
  return report;
}

std::string format_verify_report(const VerifyReport& report) {
  std::ostringstream os;
  os << "verification suite: " << to_string(report.suite) << "\n";
  for (const auto& c : report.criteria) {
    const char* status = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
    os << "[" << status << "] criterion " << c.number << ": " << c.title << "\n";
    for (const auto& d : c.details) os << "    " << d << "\n";
  }
  os << (report.all_pass() ? "RESULT: all criteria passed" : "RESULT: FAILURES PRESENT") << "\n";
  return os.str();
}

}  // namespace zetagap
