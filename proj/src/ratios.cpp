#include "zetagap/ratios.hpp"

#include <stdexcept>

namespace zetagap {

ResolvedRatio RatioSource::resolve(int k) {
  if (k < 1 || k > 15) throw std::invalid_argument("RatioSource: require 1 <= k <= 15");
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;

  ResolvedRatio out;
  if (k <= 8) {
    CkOptions opts;
    opts.threads = threads_;
    out = {ratio_b_over_c(k, opts), "computed"};
  } else if (auto cached = find_cached_ck(k, cache_dir_, OrderMode::ordered, MRange::i_lt_j_1k)) {
    out = {b_of_k(k) / cached->value, "computed (cached)"};
  } else {
    auto it = fixtures_->ratios.find(k);
    if (it == fixtures_->ratios.end())
      throw std::runtime_error("RatioSource: no source for k = " + std::to_string(k));
    out = {it->second, "paper-fixture"};
  }
  memo_.emplace(k, out);
  return out;
}

}  // namespace zetagap
