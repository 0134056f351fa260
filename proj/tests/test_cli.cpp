// End-to-end checks of the CLI surface: table reproduction, bound reporting
// with the discrepancy note, zero-scan CSV output, exit-code contract.
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + ZETAGAP_CLI_BIN + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

long count_lines(const std::string& s) {
  long n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("tables A: 15 rows, k=1 row shows 0.63662") {
  const RunResult r = run_cli("tables --which A --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("k,computed,paper") == 0);
  CHECK(r.output.find("0.63662") != std::string::npos);
  std::istringstream is(r.output);
  std::string line;
  long rows = 0;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#' && line.find("k,") != 0) ++rows;
  CHECK(rows == 15);
}

TEST_CASE("tables bounds_full: k=15 row present and passing") {
  const RunResult r = run_cli("tables --which bounds_full --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream is(r.output);
  std::string line, row15;
  while (std::getline(is, line))
    if (line.rfind("15,", 0) == 0) row15 = line;
  REQUIRE(!row15.empty());
  CHECK(row15.find("6.1392") != std::string::npos);
  CHECK(row15.find("pass") != std::string::npos);
  CHECK(row15.find("paper-fixture") != std::string::npos);
}

TEST_CASE("tables ratios: exact match for computed rows") {
  const RunResult r = run_cli("tables --which ratios --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream is(r.output);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("k,", 0) == 0) continue;
    const bool computed = line.find(",computed") != std::string::npos;
    if (computed) CHECK(line.find("exact") != std::string::npos);
  }
}

TEST_CASE("bound mixed emits both variants and the discrepancy note") {
  const RunResult r = run_cli("bound --method mixed --k 2 --h 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("discrepancy") != std::string::npos);
  CHECK(r.output.find("paper") != std::string::npos);
  CHECK(r.output.find("derived") != std::string::npos);
  CHECK(r.output.find("1.9866") != std::string::npos);  // value with the paper K
  CHECK(r.output.find("28/3") != std::string::npos);    // exact radicand
}

TEST_CASE("bound full k=1 gives sqrt(3) with the conjectural hypothesis tag") {
  const RunResult r = run_cli("bound --method full --k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1.7320508") != std::string::npos);
  CHECK(r.output.find("RH_plus_moment_conjectures") != std::string::npos);
}

TEST_CASE("bound wirtinger reproduces 1.6529") {
  const RunResult r = run_cli("bound --method unconditional-wirtinger");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1.6529") != std::string::npos);
}

TEST_CASE("zeros scan 10..100 emits 29 CSV data rows") {
  const RunResult r = run_cli("zeros --from 10 --to 100");
  CHECK(r.exit_code == 0);
  std::istringstream is(r.output);
  std::string line;
  long rows = 0;
  bool header_ok = false;
  while (std::getline(is, line)) {
    if (line == "index,ordinate,gap,normalized_gap") header_ok = true;
    else if (!line.empty() && line[0] != '#' && line.find(',') != std::string::npos) ++rows;
  }
  CHECK(header_ok);
  CHECK(rows == 29);
  // first data row: index 1, ordinate within 1e-3 of the first zero
  const auto pos = r.output.find("\n1,");
  REQUIRE(pos != std::string::npos);
  const double first = std::atof(r.output.c_str() + pos + 3);
  CHECK(std::fabs(first - 14.134725) <= 1e-3);
}

TEST_CASE("zeros usage error: t_end < t_start exits 2") {
  const RunResult r = run_cli("zeros --from 100 --to 10");
  CHECK(r.exit_code == 2);
}

TEST_CASE("unknown table tag exits 2") {
  const RunResult r = run_cli("tables --which nonsense");
  CHECK(r.exit_code == 2);
}

TEST_CASE("moments Z4 at T=1e4: one data row with a sane ratio") {
  const RunResult r = run_cli("moments --kind Z4 --T 10000 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Z4,") != std::string::npos);
  CHECK(r.output.find("ratio") != std::string::npos);
}

TEST_CASE("json output carries the manifest schema") {
  const RunResult r = run_cli("tables --which K1k --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"command\": \"tables\"") != std::string::npos);
  CHECK(r.output.find("\"parameters\"") != std::string::npos);
  CHECK(r.output.find("\"rows\"") != std::string::npos);
  CHECK(r.output.find("\"provenance\"") != std::string::npos);
}

TEST_CASE("identical table invocations are bit-identical modulo wall_time") {
  auto strip_wall = [](std::string s) {
    std::istringstream is(s);
    std::string line, out;
    while (std::getline(is, line))
      if (line.find("wall_time") == std::string::npos) out += line + "\n";
    return out;
  };
  const RunResult a = run_cli("tables --which b_values --format markdown");
  const RunResult b = run_cli("tables --which b_values --format markdown");
  CHECK(a.exit_code == 0);
  CHECK(strip_wall(a.output) == strip_wall(b.output));
}
