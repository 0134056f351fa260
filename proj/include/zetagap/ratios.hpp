// Resolution of the exact ratio b(k)/c(k) for the full-bound pipeline:
// computed live for k <= 8, from the disk cache for k = 9,10 (shipped seed or
// a --long run), from the paper fixture table for k = 11..15. Every resolved
// value carries its provenance so reports can label rows.
#pragma once

#include "zetagap/cache.hpp"
#include "zetagap/fixtures.hpp"
#include "zetagap/rational.hpp"

#include <map>
#include <string>

namespace zetagap {

struct ResolvedRatio {
  ExactRational value;
  std::string provenance;  // "computed", "computed (cached)", "paper-fixture"
};

class RatioSource {
 public:
  RatioSource(const PaperFixtures& fixtures, std::string cache_dir, int threads = 1)
      : fixtures_(&fixtures), cache_dir_(std::move(cache_dir)), threads_(threads) {}

  // k in 1..15; throws outside that range.
  ResolvedRatio resolve(int k);

 private:
  const PaperFixtures* fixtures_;
  std::string cache_dir_;
  int threads_;
  std::map<int, ResolvedRatio> memo_;
};

}  // namespace zetagap
