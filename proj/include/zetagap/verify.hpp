// The verification suite: one entry per acceptance criterion, each comparing
// recomputed values against the published ones at pinned tolerances. Shared
// by the CLI `verify` command and the acceptance test binary.
#pragma once

#include "zetagap/fixtures.hpp"

#include <string>
#include <vector>

namespace zetagap {

enum class VerifySuite { quick, paper, longrun };

std::string to_string(VerifySuite s);

struct CriterionResult {
  int number = 0;           // criterion number
  std::string title;
  bool pass = false;
  bool skipped = false;     // gated checks (e.g. behind --long)
  std::vector<std::string> details;  // one line per sub-check
};

struct VerifyReport {
  VerifySuite suite;
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
};

struct VerifyContext {
  PaperFixtures fixtures;
  std::string cache_dir;
  std::string cli_path;  // binary to respawn for the determinism criterion; empty = skip
  int threads = 1;
};

// Runs one numbered criterion (1..9) under the given suite's scope rules.
CriterionResult run_criterion(int number, VerifySuite suite, VerifyContext& ctx);

VerifyReport run_verify_suite(VerifySuite suite, VerifyContext& ctx);

// Renders in the fixed, timing-free format the determinism criterion compares.
std::string format_verify_report(const VerifyReport& report);

}  // namespace zetagap
