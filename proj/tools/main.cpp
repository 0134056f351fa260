// zetagap: reproduces and audits the published constants, bounds and tables,
// runs the verification suite, and drives the Z-function lab.
#include "render.hpp"

#include "zetagap/bounds.hpp"
#include "zetagap/cache.hpp"
#include "zetagap/fixtures.hpp"
#include "zetagap/moments.hpp"
#include "zetagap/opial.hpp"
#include "zetagap/ratios.hpp"
#include "zetagap/verify.hpp"
#include "zetagap/zfunction.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace zg = zetagap;
using zg::cli::cell;
using zg::cli::Format;
using zg::cli::TableDoc;

namespace {

struct GlobalOpts {
  std::string format = "markdown";
  std::string cache_dir;
  bool long_run = false;
  double tolerance = 0.0;  // 0 = per-table default
  int threads = 1;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Format parse_format(const std::string& s) {
  auto f = zg::cli::format_from_string(s);
  if (!f) throw CLI::ValidationError("--format must be one of csv, json, markdown");
  return *f;
}

std::string self_path(const char* argv0) {
  std::error_code ec;
  auto p = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) return p.string();
  return argv0;
}

std::string fmtg(double v, int significant = 8) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

// ---------------------------------------------------------------- tables ---

void add_comparison_row(TableDoc& doc, int k, double computed, double paper, double tol,
                        const std::string& provenance) {
  const double diff = std::fabs(computed - paper);
  doc.rows.push_back({cell(std::to_string(k)), cell(computed), cell(paper, 6), cell(diff, 3),
                      cell(diff <= tol ? "pass" : "FAIL"), cell(provenance)});
}

int cmd_tables(const std::string& which, const GlobalOpts& g) {
  Timer timer;
  const zg::PaperFixtures fx = zg::load_paper_fixtures(zg::default_fixture_path());
  TableDoc doc;
  doc.command = "tables";
  doc.parameters = {{"which", which}, {"format", g.format}};

  if (which == "A") {
    const double tol = g.tolerance > 0 ? g.tolerance : 1e-4;
    doc.title = "A(k), computed vs printed";
    doc.columns = {"k", "computed", "paper", "abs_diff", "status", "provenance"};
    for (int k = 1; k <= 15; ++k)
      add_comparison_row(doc, k, zg::A_of_k(k), fx.a_decimals.at(k), tol, "computed");
    doc.parameters.emplace_back("tolerance", fmtg(tol, 3));
  } else if (which == "K1k") {
    const double tol = g.tolerance > 0 ? g.tolerance : 1e-4;
    doc.title = "K(1,k), computed vs printed";
    doc.columns = {"k", "computed", "paper", "abs_diff", "status", "provenance"};
    for (int k = 2; k <= 7; ++k)
      add_comparison_row(doc, k, zg::K_mixed_paper(1, k), fx.k_mixed_decimals.at(k), tol,
                         "computed");
    doc.parameters.emplace_back("tolerance", fmtg(tol, 3));
  } else if (which == "b_values") {
    doc.title = "b(1,k) and b(k,k), computed vs printed (exact)";
    doc.columns = {"h", "k", "computed", "paper", "match", "provenance"};
    for (int k = 2; k <= 7; ++k) {
      for (int h : {1, k}) {
        const zg::ExactRational got = zg::b_mixed(h, k);
        const zg::ExactRational& want = fx.b_values.at({h, k});
        doc.rows.push_back({cell(std::to_string(h)), cell(std::to_string(k)),
                            cell(got.to_string()), cell(want.to_string()),
                            cell(got == want ? "exact" : "MISMATCH"), cell("computed")});
      }
    }
  } else if (which == "ratios") {
    doc.title = "b(k)/c(k), resolved vs printed (exact)";
    doc.columns = {"k", "resolved", "paper", "match", "provenance"};
    zg::RatioSource ratios(fx, g.cache_dir, g.threads);
    for (int k = 1; k <= 15; ++k) {
      const zg::ResolvedRatio rr = ratios.resolve(k);
      const zg::ExactRational& want = fx.ratios.at(k);
      std::string match = rr.provenance == "paper-fixture"
                              ? "fixture"
                              : (rr.value == want ? "exact" : "MISMATCH");
      doc.rows.push_back({cell(std::to_string(k)), cell(rr.value.to_string()),
                          cell(want.to_string()), cell(match), cell(rr.provenance)});
    }
  } else if (which == "bounds_mixed") {
    const double tol = g.tolerance > 0 ? g.tolerance : 1e-3;
    doc.title = "Mixed conditional bounds (h = 1), computed vs printed";
    doc.columns = {"k", "computed", "paper", "abs_diff", "status", "provenance"};
    for (int k = 2; k <= 7; ++k) {
      const zg::BoundResult b = zg::lambda_mixed(1, k, zg::MixedVariant::paper);
      add_comparison_row(doc, k, b.value, fx.bounds_mixed_decimals.at(k), tol, "computed");
    }
    doc.parameters.emplace_back("tolerance", fmtg(tol, 3));
    doc.provenance.push_back("hypothesis: RH_plus_moment_conjectures");
  } else if (which == "bounds_full") {
    const double tol = g.tolerance > 0 ? g.tolerance : 1e-3;
    doc.title = "Full conditional bounds Lambda(k), computed vs printed";
    doc.columns = {"k", "computed", "paper", "abs_diff", "status", "provenance"};
    zg::RatioSource ratios(fx, g.cache_dir, g.threads);
    for (int k = 1; k <= 15; ++k) {
      const zg::ResolvedRatio rr = ratios.resolve(k);
      const zg::BoundResult b = zg::lambda_full(k, rr.value, rr.provenance);
      add_comparison_row(doc, k, b.value, fx.bounds_full_decimals.at(k), tol, rr.provenance);
    }
    doc.parameters.emplace_back("tolerance", fmtg(tol, 3));
    doc.provenance.push_back("hypothesis: RH_plus_moment_conjectures");
  } else {
    throw CLI::ValidationError("unknown table tag: " + which);
  }

  bool any_fail = false;
  for (const auto& row : doc.rows)
    for (const auto& c : row)
      if (c.text == "FAIL" || c.text == "MISMATCH") any_fail = true;
  doc.wall_seconds = timer.seconds();
  std::cout << zg::cli::render(doc, parse_format(g.format));
  return any_fail ? 1 : 0;
}

// ----------------------------------------------------------------- bound ---

void push_bound_rows(TableDoc& doc, const zg::BoundResult& b, const std::string& label) {
  auto add = [&](const std::string& field, zg::cli::Cell value) {
    doc.rows.push_back({cell(label), cell(field), std::move(value)});
  };
  add("value", cell(b.value));
  add("hypothesis", cell(zg::to_string(b.hypothesis)));
  if (b.k > 0) add("k", cell(std::to_string(b.k)));
  if (b.h) add("h", cell(std::to_string(*b.h)));
  if (b.exact_radicand) add("exact_radicand", cell(b.exact_radicand->to_string()));
  if (!b.ratio_provenance.empty()) add("ratio_provenance", cell(b.ratio_provenance));
}

int cmd_bound(const std::string& method, int k, int h, const std::string& variant,
              const GlobalOpts& g) {
  Timer timer;
  TableDoc doc;
  doc.command = "bound";
  doc.parameters = {{"method", method}};
  doc.columns = {"result", "field", "value"};

  if (method == "unconditional-wirtinger") {
    push_bound_rows(doc, zg::lambda_wirtinger_unconditional(), "wirtinger");
    doc.provenance.push_back("labeled unconditional for the critical-line gap statistic; the "
                             "underlying proof wording assumes RH");
  } else if (method == "unconditional-boyd") {
    push_bound_rows(doc, zg::lambda_boyd_unconditional(), "boyd");
  } else if (method == "hall") {
    push_bound_rows(doc, zg::hall_reference(), "hall");
    doc.provenance.push_back("reference value for comparison only");
  } else if (method == "full") {
    if (k < 1) throw CLI::ValidationError("bound: --k required for method=full");
    doc.parameters.emplace_back("k", std::to_string(k));
    const zg::PaperFixtures fx = zg::load_paper_fixtures(zg::default_fixture_path());
    zg::RatioSource ratios(fx, g.cache_dir, g.threads);
    const zg::ResolvedRatio rr = ratios.resolve(k);
    push_bound_rows(doc, zg::lambda_full(k, rr.value, rr.provenance), "full");
  } else if (method == "mixed") {
    if (k < 1 || h < 1) throw CLI::ValidationError("bound: --k and --h required for method=mixed");
    doc.parameters.emplace_back("k", std::to_string(k));
    doc.parameters.emplace_back("h", std::to_string(h));
    doc.parameters.emplace_back("variant", variant);
    const zg::BoundResult paper = zg::lambda_mixed(h, k, zg::MixedVariant::paper);
    const zg::BoundResult derived = zg::lambda_mixed(h, k, zg::MixedVariant::derived);
    const double Kp = zg::K_mixed_paper(h, k);
    const double Kd = zg::K_mixed_derived(h, k);
    if (variant == "paper") {
      push_bound_rows(doc, paper, "mixed (paper K)");
      push_bound_rows(doc, derived, "mixed (derived K, audit)");
    } else {
      push_bound_rows(doc, derived, "mixed (derived K)");
      push_bound_rows(doc, paper, "mixed (paper K, reference)");
    }
    std::ostringstream note;
    note << "discrepancy: the printed K(h,k) formula and the p=2k-2h, q=2h substitution into "
         << "the r=p+q constant disagree: K=" << fmtg(Kp) << " (paper) vs " << fmtg(Kd)
         << " (derived); the published mixed-bound table follows the paper reading";
    doc.provenance.push_back(note.str());
  } else {
    throw CLI::ValidationError("unknown bound method: " + method);
  }

  doc.wall_seconds = timer.seconds();
  std::cout << zg::cli::render(doc, parse_format(g.format));
  return 0;
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(const std::string& suite_name, const GlobalOpts& g, const char* argv0) {
  Timer timer;
  zg::VerifySuite suite;
  if (suite_name == "quick") suite = zg::VerifySuite::quick;
  else if (suite_name == "paper") suite = zg::VerifySuite::paper;
  else if (suite_name == "long") suite = zg::VerifySuite::longrun;
  else throw CLI::ValidationError("verify: --suite must be quick, paper or long");

  zg::VerifyContext ctx{zg::load_paper_fixtures(zg::default_fixture_path()), g.cache_dir,
                        suite == zg::VerifySuite::quick ? "" : self_path(argv0), g.threads};
  const zg::VerifyReport report = zg::run_verify_suite(suite, ctx);
  std::cout << zg::format_verify_report(report);
  std::cerr << "wall_time: " << timer.seconds() << " s\n";
  return report.all_pass() ? 0 : 1;
}

// ----------------------------------------------------------------- zeros ---

std::string zero_csv(const zg::ScanResult& scan) {
  std::ostringstream os;
  os << "index,ordinate,gap,normalized_gap\n";
  char buf[128];
  for (const auto& r : scan.records) {
    if (r.gap) {
      std::snprintf(buf, sizeof buf, "%d,%.9f,%.9f,%.9f\n", r.index, r.ordinate, *r.gap,
                    *r.normalized_gap);
    } else {
      std::snprintf(buf, sizeof buf, "%d,%.9f,,\n", r.index, r.ordinate);
    }
    os << buf;
  }
  return os.str();
}

int cmd_zeros(double from, double to, const std::string& out_path, int density, double tol,
              const std::string& check_path, const GlobalOpts& g) {
  Timer timer;
  zg::ScanConfig cfg;
  cfg.t_start = from;
  cfg.t_end = to;
  cfg.grid_points_per_mean_spacing = density;
  cfg.bisection_tolerance = tol;
  cfg.validate();  // usage errors before any work

  const zg::ScanResult scan = zg::scan_zeros(cfg);

  TableDoc doc;
  doc.command = "zeros";
  doc.parameters = {{"t_start", fmtg(from)},
                    {"t_end", fmtg(to)},
                    {"grid_points_per_mean_spacing", std::to_string(density)},
                    {"bisection_tolerance", fmtg(tol, 3)}};
  doc.columns = {"statistic", "value"};
  doc.rows.push_back({cell("zero_count"), cell(std::to_string(scan.records.size()))});
  if (scan.records.size() >= 2) {
    doc.rows.push_back({cell("mean_normalized_gap"), cell(zg::mean_normalized_gap(scan.records))});
    doc.rows.push_back({cell("max_normalized_gap"), cell(zg::max_normalized_gap(scan.records))});
  }
  doc.provenance.push_back(
      "finite-range statistics over the scanned window; not bounds on the limsup statistic");
  for (const auto& w : scan.coverage_warnings) doc.provenance.push_back("coverage warning: " + w);

  if (!check_path.empty()) {
    std::ifstream in(check_path);
    if (!in) throw std::runtime_error("zeros: cannot open check table " + check_path);
    const std::vector<double> reference = zg::import_zero_table(in);
    double worst = 0.0;
    long matched = 0;
    for (const auto& r : scan.records) {
      for (double ref : reference) {
        if (std::fabs(ref - r.ordinate) < 0.5) {
          worst = std::max(worst, std::fabs(ref - r.ordinate));
          ++matched;
          break;
        }
      }
    }
    doc.rows.push_back({cell("check_matched"), cell(std::to_string(matched))});
    doc.rows.push_back({cell("check_max_abs_diff"), cell(worst, 3)});
    doc.provenance.push_back("cross-validated against " + check_path +
                             (worst <= 1e-3 ? " (within 1e-3)" : " (EXCEEDS 1e-3)"));
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("zeros: cannot write " + out_path);
    out << zero_csv(scan);
    doc.outputs.push_back(out_path);
    doc.wall_seconds = timer.seconds();
    std::cout << zg::cli::render(doc, parse_format(g.format));
  } else {
    // CSV rows to stdout; summary as comment lines keeps the stream parseable
    std::cout << zero_csv(scan);
    for (const auto& r : doc.rows) std::cout << "# " << r[0].text << ": " << r[1].text << "\n";
    for (const auto& p : doc.provenance) std::cout << "# " << p << "\n";
    std::cout << "# wall_time: " << timer.seconds() << " s\n";
  }
  return 0;
}

// --------------------------------------------------------------- moments ---

int cmd_moments(const std::string& kind_name, double T, int density, const GlobalOpts& g) {
  Timer timer;
  zg::MomentKind kind;
  if (kind_name == "Z4") kind = zg::MomentKind::Z4;
  else if (kind_name == "Zp4") kind = zg::MomentKind::Zp4;
  else if (kind_name == "Z2Zp2") kind = zg::MomentKind::Z2Zp2;
  else throw CLI::ValidationError("moments: --kind must be Z4, Zp4 or Z2Zp2");

  const zg::MomentEstimate m = zg::moment_integral(kind, T, density);
  TableDoc doc;
  doc.command = "moments";
  doc.parameters = {{"kind", kind_name}, {"T", fmtg(T)}, {"grid_density", std::to_string(density)}};
  doc.columns = {"kind", "T", "integral", "predicted_leading", "ratio"};
  doc.rows.push_back(
      {cell(kind_name), cell(m.T), cell(m.integral), cell(m.predicted_leading), cell(m.ratio)});
  doc.provenance.push_back("integral over [10, T]; the omitted [0,10] contributes O(1)");
  doc.provenance.push_back(
      "error terms sit one log-power below the leading term; the ratio approaches 1 "
      "only logarithmically");
  doc.wall_seconds = timer.seconds();
  std::cout << zg::cli::render(doc, parse_format(g.format));
  return 0;
}

// ----------------------------------------------------------------- cache ---

int cmd_cache(const std::string& action, int k, const GlobalOpts& g) {
  Timer timer;
  const std::string cache_file = zg::ck_cache_path(g.cache_dir);
  if (action == "show") {
    TableDoc doc;
    doc.command = "cache";
    doc.parameters = {{"action", "show"}, {"cache_dir", g.cache_dir}};
    doc.columns = {"k", "order_mode", "m_range", "c(k)", "wall_seconds", "source"};
    for (const auto& [path, source] :
         {std::pair{cache_file, "cache"}, {zg::seed_cache_path(), "seed"}}) {
      for (const auto& [kk, e] : zg::load_ck_cache(path)) {
        doc.rows.push_back({cell(std::to_string(kk)), cell(zg::to_string(e.order_mode)),
                            cell(zg::to_string(e.m_range)), cell(e.value.to_string()),
                            cell(e.wall_seconds, 4), cell(source)});
      }
    }
    doc.wall_seconds = timer.seconds();
    std::cout << zg::cli::render(doc, parse_format(g.format));
    return 0;
  }
  if (action == "clear") {
    std::error_code ec;
    std::filesystem::remove(cache_file, ec);
    std::cout << "cache cleared: " << cache_file << "\n";
    return 0;
  }
  if (action == "compute") {
    if (k < 1) throw CLI::ValidationError("cache compute: --k required");
    zg::CkOptions opts;
    opts.allow_long = g.long_run;
    opts.threads = g.threads;
    opts.progress = [](std::uint64_t done, std::uint64_t total) {
      std::cerr << "\rprogress: " << done << "/" << total << std::flush;
      if (done == total) std::cerr << "\n";
    };
    Timer ck_timer;
    const zg::ExactRational ck = zg::c_of_k(k, opts);
    const double wall = ck_timer.seconds();

    zg::CkCache cache = zg::load_ck_cache(cache_file);
    zg::CkCacheEntry entry;
    entry.k = k;
    entry.order_mode = opts.order_mode;
    entry.m_range = opts.m_range;
    entry.value = ck;
    entry.wall_seconds = wall;
    cache[k] = entry;
    zg::save_ck_cache(cache_file, cache);

    TableDoc doc;
    doc.command = "cache";
    doc.parameters = {{"action", "compute"}, {"k", std::to_string(k)}};
    doc.columns = {"k", "c(k)", "ratio b(k)/c(k)", "fixture_match"};
    const zg::ExactRational ratio = zg::b_of_k(k) / ck;
    std::string match = "n/a";
    const zg::PaperFixtures fx = zg::load_paper_fixtures(zg::default_fixture_path());
    if (auto it = fx.ratios.find(k); it != fx.ratios.end())
      match = (ratio == it->second) ? "exact" : "MISMATCH";
    doc.rows.push_back(
        {cell(std::to_string(k)), cell(ck.to_string()), cell(ratio.to_string()), cell(match)});
    doc.outputs.push_back(cache_file);
    doc.wall_seconds = timer.seconds();
    std::cout << zg::cli::render(doc, parse_format(g.format));
    return match == "MISMATCH" ? 1 : 0;
  }
  throw CLI::ValidationError("cache: action must be show, compute or clear");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetagap: zero-gap constants, bounds and Z-function lab"};
  app.set_help_flag("--help", "print help");  // keep -h free for bound --h
  app.require_subcommand(1);

  GlobalOpts g;
  g.cache_dir = zg::default_cache_dir();
  app.add_option("--format", g.format, "output format: csv, json, markdown")
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "c(k) cache directory")->capture_default_str();
  app.add_flag("--long", g.long_run, "allow long-running computations (k >= 11 enumeration)");
  app.add_option("--tolerance", g.tolerance, "override table comparison tolerance");
  app.add_option("--threads", g.threads, "worker threads for c(k) enumeration")
      ->capture_default_str();

  auto* tables = app.add_subcommand("tables", "reproduce a published table");
  tables->fallthrough();
  std::string which;
  tables->add_option("--which", which, "A, K1k, b_values, ratios, bounds_mixed, bounds_full")
      ->required();

  auto* bound = app.add_subcommand("bound", "evaluate one lower bound");
  bound->fallthrough();
  std::string method, variant = "paper";
  int bk = 0, bh = 0;
  bound->add_option("--method", method,
                    "full, mixed, unconditional-wirtinger, unconditional-boyd, hall")
      ->required();
  bound->add_option("--k", bk, "moment index k");
  bound->add_option("--h", bh, "derivative index h (mixed)");
  bound->add_option("--variant", variant, "paper or derived (mixed)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->fallthrough();
  std::string suite = "quick";
  verify->add_option("--suite", suite, "quick, paper or long")->capture_default_str();

  auto* zeros = app.add_subcommand("zeros", "scan critical-line zeros");
  zeros->fallthrough();
  double zfrom = 10.0, zto = 0.0, ztol = 1e-9;
  int zdensity = 8;
  std::string zout, zcheck;
  zeros->add_option("--from", zfrom, "scan start (>= 10)")->capture_default_str();
  zeros->add_option("--to", zto, "scan end")->required();
  zeros->add_option("--out", zout, "write CSV to this path");
  zeros->add_option("--density", zdensity, "grid points per mean spacing")->capture_default_str();
  zeros->add_option("--bisection-tol", ztol, "bisection tolerance")->capture_default_str();
  zeros->add_option("--check", zcheck, "zero table to cross-validate against");

  auto* moments = app.add_subcommand("moments", "fourth-power moment integral");
  moments->fallthrough();
  std::string mkind;
  double mT = 0.0;
  int mdensity = 8;
  moments->add_option("--kind", mkind, "Z4, Zp4 or Z2Zp2")->required();
  moments->add_option("--T", mT, "upper limit, in [1e2, 1e6]")->required();
  moments->add_option("--density", mdensity, "grid points per mean spacing")
      ->capture_default_str();

  auto* cache = app.add_subcommand("cache", "manage the c(k) cache");
  cache->fallthrough();
  std::string caction;
  int cachek = 0;
  cache->add_option("action", caction, "show, compute or clear")->required();
  cache->add_option("--k", cachek, "k to compute");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  }

  try {
    if (tables->parsed()) return cmd_tables(which, g);
    if (bound->parsed()) return cmd_bound(method, bk, bh, variant, g);
    if (verify->parsed()) return cmd_verify(suite, g, argv[0]);
    if (zeros->parsed()) return cmd_zeros(zfrom, zto, zout, zdensity, ztol, zcheck, g);
    if (moments->parsed()) return cmd_moments(mkind, mT, mdensity, g);
    if (cache->parsed()) return cmd_cache(caction, cachek, g);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
