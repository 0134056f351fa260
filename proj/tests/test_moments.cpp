#include "zetagap/moments.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace zetagap;

namespace {

std::vector<std::vector<int>> collect(int k, OrderMode mode) {
  std::vector<std::vector<int>> out;
  enumerate_compositions(k, mode, [&](const Composition& c) { out.push_back(c.parts); });
  return out;
}

// naive per-term evaluation over the generic enumeration; independent of the
// pruned common-denominator fast path in c_of_k
ExactRational c_of_k_naive(int k) {
  ExactRational sum(0);
  enumerate_compositions(k, OrderMode::ordered, [&](const Composition& comp) {
    const auto& m = comp.parts;
    mpq_class term(factorial_z(2 * k));
    for (int v : m) term /= factorial_z(v);
    mpz_class two_pow;
    mpz_class two(2);
    mpz_pow_ui(two_pow.get_mpz_t(), two.get_mpz_t(), m[0]);
    term /= two_pow;
    if (m[0] % 2 == 1) term = -term;
    for (int i = 1; i <= k; ++i) term /= factorial_z(2 * k - i + m[i]);
    mpz_class M(1);
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) M *= (m[j] - m[i] + i - j);
    term *= M;
    sum += ExactRational(mpq_class(term));
  });
  const int sign = (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
  return ExactRational(sign) * sum;
}

}  // namespace

TEST_CASE("b(k) small values") {
  CHECK(b_of_k(1) == ExactRational(1));
  CHECK(b_of_k(2) == ExactRational(1, 12));
  CHECK(b_of_k(3) == ExactRational(1, 8640));
  CHECK_THROWS_AS(b_of_k(0), std::invalid_argument);
}

TEST_CASE("composition enumeration: tiny exhaustive cases") {
  auto ordered1 = collect(1, OrderMode::ordered);
  CHECK(ordered1 == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
  auto nondec1 = collect(1, OrderMode::nondecreasing);
  CHECK(nondec1 == std::vector<std::vector<int>>{{0, 2}, {1, 1}});
  CHECK(collect(2, OrderMode::ordered).size() == 15);  // C(6,2), stars and bars
}

TEST_CASE("ordered composition count equals C(3k,k)") {
  for (int k = 1; k <= 6; ++k) {
    auto all = collect(k, OrderMode::ordered);
    CHECK(mpz_class(static_cast<long>(all.size())) == composition_count(k));
    // no duplicates
    std::set<std::vector<int>> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    for (const auto& parts : all) {
      int sum = 0;
      for (int v : parts) sum += v;
      CHECK(sum == 2 * k);
      CHECK(parts.size() == static_cast<std::size_t>(k + 1));
    }
  }
}

TEST_CASE("c(k) exact values against published ratios") {
  CHECK(c_of_k(1) == ExactRational(1, 12));
  CHECK(c_of_k(2) == ExactRational(1, 6720));
  CHECK(c_of_k(3) == ExactRational(1, 496742400));
}

TEST_CASE("fast path equals the naive enumeration") {
  for (int k = 1; k <= 4; ++k) CHECK(c_of_k(k) == c_of_k_naive(k));
}

TEST_CASE("c(k) equals b(k,k): the derivative-moment constant cross-check") {
  for (int k = 1; k <= 6; ++k) CHECK(c_of_k(k) == b_mixed(k, k));
}

TEST_CASE("parallel enumeration is bit-identical to sequential") {
  CkOptions seq;
  CkOptions par;
  par.threads = 4;
  CHECK(c_of_k(5, seq) == c_of_k(5, par));
  CHECK(c_of_k(6, seq) == c_of_k(6, par));
}

TEST_CASE("b and c positive through k = 8") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(b_of_k(k).is_positive());
    CHECK(c_of_k(k).is_positive());
  }
}

TEST_CASE("ratio b/c small values") {
  CHECK(ratio_b_over_c(1) == ExactRational(12));
  CHECK(ratio_b_over_c(2) == ExactRational(560));
  CHECK(ratio_b_over_c(3) == ExactRational(172480, 3));
}

TEST_CASE("runtime budget: k = 11 refused without the long flag") {
  CkOptions opts;
  try {
    c_of_k(11, opts);
    FAIL("expected refusal");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("long-run") != std::string::npos);
    CHECK(std::string(e.what()).find("terms") != std::string::npos);  // cost estimate
  }
}

TEST_CASE("interpretation lock-in finds exactly the expected reading") {
  const LockInResult lock = interpretation_lock_in();
  CHECK(lock.order_mode == OrderMode::ordered);
  CHECK(lock.m_range == MRange::i_lt_j_1k);
  CHECK(lock.diagnostics.find("[ok]") != std::string::npos);
}

TEST_CASE("H(h,k) table evaluation") {
  for (int k = 1; k <= 10; ++k) CHECK(H_rational(0, k) == ExactRational(1));
  CHECK(H_rational(1, 2) == ExactRational(1, 15));    // 1/(16-1)
  CHECK(H_rational(2, 2) == ExactRational(1, 105));   // 1/((16-1)(16-9))
  CHECK_THROWS_AS(H_rational(8, 3), std::invalid_argument);
  CHECK_THROWS_AS(H_rational(-1, 3), std::invalid_argument);
}

TEST_CASE("H pole rejection names the factor") {
  try {
    detail::H_eval_at_K(2, 3);  // K^2 = 9 hits the K^2-9 factor
    FAIL("expected pole rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("K^2-9") != std::string::npos);
  }
}

TEST_CASE("b_mixed matches printed values and the h = 0 reduction") {
  CHECK(b_mixed(1, 2) == ExactRational(1, 720));
  CHECK(b_mixed(3, 3) == ExactRational(1, 496742400));
  for (int k = 1; k <= 7; ++k) CHECK(b_mixed(0, k) == b_of_k(k));
  CHECK_THROWS_AS(b_mixed(5, 4), std::invalid_argument);  // h > k
  CHECK_THROWS_AS(b_mixed(-1, 4), std::invalid_argument);
}

TEST_CASE("monic denominator audit") {
  for (int h : {1, 2, 4, 5, 6, 7}) {
    const MonicAuditReport rep = audit_monic_denominator(h);
    CHECK_MESSAGE(rep.all_match, "h=", h);
  }
  const MonicAuditReport rep3 = audit_monic_denominator(3);
  CHECK_FALSE(rep3.all_match);
  bool found_a3 = false;
  for (const auto& row : rep3.rows) {
    if (row.a == 3) {
      found_a3 = true;
      CHECK(row.predicted_exponent == 1);
      CHECK(row.actual_exponent == 0);
      CHECK_FALSE(row.match);
    } else {
      CHECK(row.match);
    }
  }
  CHECK(found_a3);
  CHECK(rep3.note.find("K^2-9") != std::string::npos);

  // spot-check predicted exponents where alpha is an exact integer
  const MonicAuditReport rep1 = audit_monic_denominator(1);
  REQUIRE(rep1.rows.size() == 1);
  CHECK(rep1.rows[0].a == 1);
  CHECK(rep1.rows[0].predicted_exponent == 1);
}

TEST_CASE("ExactRational basics") {
  CHECK(ExactRational(2, 4).to_string() == "1/2");
  CHECK(ExactRational(-2, 4).to_string() == "-1/2");
  CHECK(ExactRational(3, -6).to_string() == "-1/2");  // canonical: positive denominator
  CHECK(ExactRational::from_string("7533/901").to_string() == "7533/901");
  CHECK(ExactRational::from_string("42").to_string() == "42");
  CHECK_THROWS_AS(ExactRational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ExactRational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(ExactRational(1, 2) / ExactRational(0), std::invalid_argument);
  CHECK(parse_factored_integer("2^6*3*5*7") == 6720);
  CHECK(parse_factored_integer("31") == 31);
}
