#include "zetagap/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef ZETAGAP_SOURCE_DATA_DIR
#define ZETAGAP_SOURCE_DATA_DIR "data"
#endif

namespace zetagap {

namespace {

[[noreturn]] void fail(long lineno, const std::string& msg) {
  throw std::runtime_error("paper_fixtures: line " + std::to_string(lineno) + ": " + msg);
}

// splits "key=value" tokens; values may not contain spaces
std::map<std::string, std::string> parse_fields(const std::string& body, long lineno) {
  std::map<std::string, std::string> out;
  std::istringstream is(body);
  std::string tok;
  is >> tok;  // record tag, handled by caller
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) fail(lineno, "expected key=value, got \"" + tok + "\"");
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

int to_int(const std::map<std::string, std::string>& f, const std::string& key, long lineno) {
  auto it = f.find(key);
  if (it == f.end()) fail(lineno, "missing field " + key);
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    fail(lineno, "bad integer for " + key);
  }
}

double to_double(const std::map<std::string, std::string>& f, const std::string& key,
                 long lineno) {
  auto it = f.find(key);
  if (it == f.end()) fail(lineno, "missing field " + key);
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    fail(lineno, "bad decimal for " + key);
  }
}

std::string to_str(const std::map<std::string, std::string>& f, const std::string& key,
                   long lineno) {
  auto it = f.find(key);
  if (it == f.end()) fail(lineno, "missing field " + key);
  return it->second;
}

// "(a,e)(a,e)..." -> factor list
std::vector<std::pair<int, int>> parse_den_factors(const std::string& s, long lineno) {
  std::vector<std::pair<int, int>> out;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') fail(lineno, "expected '(' in den factor list");
    auto close = s.find(')', pos);
    if (close == std::string::npos) fail(lineno, "unclosed den factor");
    std::string body = s.substr(pos + 1, close - pos - 1);
    auto comma = body.find(',');
    if (comma == std::string::npos) fail(lineno, "den factor needs (a,e)");
    try {
      out.emplace_back(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
    } catch (const std::exception&) {
      fail(lineno, "bad den factor \"" + body + "\"");
    }
    pos = close + 1;
  }
  return out;
}

std::vector<long long> parse_coeff_list(const std::string& s, long lineno) {
  std::vector<long long> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    try {
      out.push_back(std::stoll(cur));
    } catch (const std::exception&) {
      fail(lineno, "bad coefficient \"" + cur + "\"");
    }
  }
  if (out.empty()) fail(lineno, "empty coefficient list");
  return out;
}

}  // namespace

PaperFixtures load_paper_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("paper_fixtures: cannot open " + path);

  PaperFixtures fx;
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
    auto fields = parse_fields(body, lineno);

    if (tag == "ratio") {
      const int k = to_int(fields, "k", lineno);
      const mpz_class num = parse_factored_integer(to_str(fields, "num", lineno));
      const mpz_class den = parse_factored_integer(to_str(fields, "den", lineno));
      fx.ratios.emplace(k, ExactRational(num, den));
    } else if (tag == "hfun") {
      const int h = to_int(fields, "h", lineno);
      HFunctionData data;
      data.numerator_coeffs = parse_coeff_list(to_str(fields, "num", lineno), lineno);
      const std::string den = to_str(fields, "den", lineno);
      if (den != "-") data.denominator_factors = parse_den_factors(den, lineno);
      fx.h_functions.emplace(h, std::move(data));
    } else if (tag == "bval") {
      const int h = to_int(fields, "h", lineno);
      const int k = to_int(fields, "k", lineno);
      fx.b_values.emplace(std::make_pair(h, k),
                          ExactRational::from_string(to_str(fields, "val", lineno)));
    } else if (tag == "adec") {
      fx.a_decimals.emplace(to_int(fields, "k", lineno), to_double(fields, "val", lineno));
    } else if (tag == "kmix") {
      fx.k_mixed_decimals.emplace(to_int(fields, "k", lineno), to_double(fields, "val", lineno));
    } else if (tag == "bfull") {
      fx.bounds_full_decimals.emplace(to_int(fields, "k", lineno),
                                      to_double(fields, "val", lineno));
    } else if (tag == "bmix") {
      fx.bounds_mixed_decimals.emplace(to_int(fields, "k", lineno),
                                       to_double(fields, "val", lineno));
    } else if (tag == "const") {
      fx.constants.emplace(to_str(fields, "name", lineno), to_double(fields, "val", lineno));
    } else if (tag == "cratq") {
      fx.exact_constants.emplace(to_str(fields, "name", lineno),
                                 ExactRational::from_string(to_str(fields, "val", lineno)));
    } else {
      fail(lineno, "unknown record tag \"" + tag + "\"");
    }
  }
  fx.validate_complete();
  return fx;
}

void PaperFixtures::validate_complete() const {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("paper_fixtures: incomplete: " + what);
  };
  for (int k = 1; k <= 15; ++k) need(ratios.count(k) == 1, "ratio k=" + std::to_string(k));
  for (int h = 0; h <= 7; ++h) need(h_functions.count(h) == 1, "hfun h=" + std::to_string(h));
  for (int k = 2; k <= 7; ++k) {
    need(b_values.count({1, k}) == 1, "bval (1," + std::to_string(k) + ")");
    need(b_values.count({k, k}) == 1, "bval (k,k) k=" + std::to_string(k));
  }
  for (int k = 1; k <= 15; ++k) {
    need(a_decimals.count(k) == 1, "adec k=" + std::to_string(k));
    need(bounds_full_decimals.count(k) == 1, "bfull k=" + std::to_string(k));
  }
  for (int k = 2; k <= 7; ++k) {
    need(k_mixed_decimals.count(k) == 1, "kmix k=" + std::to_string(k));
    need(bounds_mixed_decimals.count(k) == 1, "bmix k=" + std::to_string(k));
  }
  for (const char* name : {"L22", "K224", "wirtinger", "boyd", "hall", "headline"})
    need(constants.count(name) == 1, std::string("const ") + name);
  need(exact_constants.count("hall_radicand") == 1, "cratq hall_radicand");
}

std::string default_data_dir() {
  if (const char* env = std::getenv("ZGB_DATA_DIR"); env && *env) return env;
  return ZETAGAP_SOURCE_DATA_DIR;
}

std::string default_fixture_path() { return default_data_dir() + "/paper_fixtures.txt"; }

}  // namespace zetagap
