// Disk cache for computed c(k) values: a human-diffable text file with one
// record per k, carrying the enumeration conventions the value was computed
// under, so stale or mismatched entries are never silently reused.
#pragma once

#include "zetagap/moments.hpp"
#include "zetagap/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace zetagap {

struct CkCacheEntry {
  int k = 0;
  OrderMode order_mode = OrderMode::ordered;
  MRange m_range = MRange::i_lt_j_1k;
  ExactRational value;
  double wall_seconds = 0.0;
};

using CkCache = std::map<int, CkCacheEntry>;

// Missing file -> empty cache; malformed lines are errors (with line number).
CkCache load_ck_cache(const std::string& path);
void save_ck_cache(const std::string& path, const CkCache& cache);

// ZGB_CACHE_DIR, else "./.cache".
std::string default_cache_dir();
std::string ck_cache_path(const std::string& cache_dir);
// The checked-in read-only seed cache (data dir).
std::string seed_cache_path();

// Lookup across the writable cache then the seed cache, accepting only
// entries computed under the given conventions.
std::optional<CkCacheEntry> find_cached_ck(int k, const std::string& cache_dir,
                                           OrderMode order_mode, MRange m_range);

}  // namespace zetagap
