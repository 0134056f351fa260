#include "zetagap/cache.hpp"

#include "zetagap/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace zetagap {

CkCache load_ck_cache(const std::string& path) {
  CkCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto l = line.find_first_not_of(" \t\r");
    if (l == std::string::npos) continue;
    auto r = line.find_last_not_of(" \t\r");
    std::string body = line.substr(l, r - l + 1);
    if (body.empty() || body[0] == '#') continue;

    std::istringstream is(body);
    std::string tag;
    is >> tag;
    if (tag != "c")
      throw std::runtime_error("ck_cache: line " + std::to_string(lineno) + ": unknown tag");
    CkCacheEntry e;
    std::string num, den;
    std::string tok;
    while (is >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error("ck_cache: line " + std::to_string(lineno) + ": bad token");
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "k") e.k = std::stoi(val);
      else if (key == "order") {
        auto m = order_mode_from_string(val);
        if (!m) throw std::runtime_error("ck_cache: line " + std::to_string(lineno) +
                                         ": bad order mode");
        e.order_mode = *m;
      } else if (key == "mrange") {
        auto m = mrange_from_string(val);
        if (!m) throw std::runtime_error("ck_cache: line " + std::to_string(lineno) +
                                         ": bad m range");
        e.m_range = *m;
      } else if (key == "num") num = val;
      else if (key == "den") den = val;
      else if (key == "wall") e.wall_seconds = std::stod(val);
      else
        throw std::runtime_error("ck_cache: line " + std::to_string(lineno) + ": unknown key " +
                                 key);
    }
    if (e.k < 1 || num.empty() || den.empty())
      throw std::runtime_error("ck_cache: line " + std::to_string(lineno) + ": incomplete record");
    e.value = ExactRational::from_string(num + "/" + den);
    cache[e.k] = e;
  }
  return cache;
}

void save_ck_cache(const std::string& path, const CkCache& cache) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("ck_cache: cannot write " + path);
  out << "# zetagap c(k) cache\n";
  out << "# c k=<k> order=<mode> mrange=<convention> num=<int> den=<int> wall=<seconds>\n";
  for (const auto& [k, e] : cache) {
    out << "c k=" << k << " order=" << to_string(e.order_mode)
        << " mrange=" << to_string(e.m_range) << " num=" << e.value.numerator_str()
        << " den=" << e.value.denominator_str() << " wall=" << e.wall_seconds << "\n";
  }
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("ZGB_CACHE_DIR"); env && *env) return env;
  return ".cache";
}

std::string ck_cache_path(const std::string& cache_dir) { return cache_dir + "/ck_cache.txt"; }

std::string seed_cache_path() { return default_data_dir() + "/ck_cache_seed.txt"; }

std::optional<CkCacheEntry> find_cached_ck(int k, const std::string& cache_dir,
                                           OrderMode order_mode, MRange m_range) {
  for (const std::string& path : {ck_cache_path(cache_dir), seed_cache_path()}) {
    CkCache cache = load_ck_cache(path);
    auto it = cache.find(k);
    if (it != cache.end() && it->second.order_mode == order_mode &&
        it->second.m_range == m_range) {
      return it->second;
    }
  }
  return std::nullopt;
}

}  // namespace zetagap
