// Loader for the checked-in paper fixture data (data/paper_fixtures.txt):
// the exact published b(k)/c(k) ratios, the Hughes H(h,k) table, the printed
// exact b(h,k) values, and the decimal comparison tables. The file grammar is
// documented in the file itself; records are one per line.
#pragma once

#include "zetagap/moments.hpp"
#include "zetagap/rational.hpp"

#include <map>
#include <string>

namespace zetagap {

struct PaperFixtures {
  std::map<int, ExactRational> ratios;                      // k -> b(k)/c(k), k = 1..15
  std::map<int, HFunctionData> h_functions;                 // h -> H(h,.) data, h = 0..7
  std::map<std::pair<int, int>, ExactRational> b_values;    // (h,k) -> printed b(h,k)
  std::map<int, double> a_decimals;                         // k -> printed A(k)
  std::map<int, double> k_mixed_decimals;                   // k -> printed K(1,k)
  std::map<int, double> bounds_full_decimals;               // k -> printed Lambda(k) bound
  std::map<int, double> bounds_mixed_decimals;              // k -> printed mixed bound (h=1)
  std::map<std::string, double> constants;                  // headline decimal constants
  std::map<std::string, ExactRational> exact_constants;     // e.g. hall_radicand

  // Throws if any expected record family is incomplete.
  void validate_complete() const;
};

PaperFixtures load_paper_fixtures(const std::string& path);

// Resolution order: ZGB_DATA_DIR, then the build-time source data directory.
std::string default_data_dir();
std::string default_fixture_path();

}  // namespace zetagap
