#include "zetagap/opial.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetagap;

TEST_CASE("L(2,2) matches the printed value") {
  const LValue L = L_pq(2, 2);
  CHECK(L.lambda == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(std::fabs(L.value - 1.4038) <= 1e-3);
  // tighter reference from an independent high-precision evaluation
  CHECK(std::fabs(L.value - 1.40382196515536) <= 1e-9);
}

TEST_CASE("L(2,1) is exactly 1 (lambda = 0)") {
  const LValue L = L_pq(2, 1);
  CHECK(L.lambda == 0.0);
  CHECK(L.value == 1.0);
}

TEST_CASE("L(4,2) agrees with the series oracle") {
  const LValue L = L_pq(4, 2);
  CHECK(L.lambda == doctest::Approx(0.6).epsilon(1e-15));
  const double series = testing::L_series_oracle(4.0, 0.6);
  CHECK(std::fabs(L.value - series) <= 1e-9);
}

TEST_CASE("L is monotone increasing in lambda") {
  // same integrand family, increasing lambda via q at fixed p
  double prev = 0.0;
  for (double q : {1.0, 1.5, 2.0, 3.0, 4.0}) {
    const LValue L = L_pq(2, q);
    CHECK(L.value >= prev);
    prev = L.value;
  }
}

TEST_CASE("L rejects q = 0") {
  CHECK_THROWS_AS(L_pq(2, 0), std::invalid_argument);
}

TEST_CASE("K_conjugate reproduces the printed K(2,2,4)") {
  const double K = K_conjugate(2, 2);
  CHECK(std::fabs(K - 0.34613) <= 1e-4);
  CHECK(std::fabs(K - 0.346118965605933) <= 1e-8);
}

TEST_CASE("K_conjugate(2,1) = 1/3 exactly (lambda = 0)") {
  CHECK(K_conjugate(2, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("K_conjugate rejects q = 0") {
  CHECK_THROWS_AS(K_conjugate(2, 0), std::invalid_argument);
}

TEST_CASE("boyd_K at (2,2,4)") {
  const BoydBreakdown b = boyd_K({2, 2, 4});
  CHECK(std::fabs(b.K_value - 0.34613) <= 1e-4);
  CHECK(std::fabs(b.I_value - 1.38784725866638) <= 1e-8);
  CHECK(std::fabs(b.beta_value - 0.903602003609845) <= 1e-12);
  CHECK(b.error_estimate >= 0.0);
  CHECK(b.error_estimate <= 1e-10);
}

TEST_CASE("boyd_K q=0 closed Beta forms") {
  // (2,0,2): K = (2/pi)^2 via A(1) = 2/pi
  const BoydBreakdown b1 = boyd_K({2, 0, 2});
  CHECK(std::fabs(b1.K_value - std::pow(2.0 / M_PI, 2)) <= 1e-4);
  CHECK(std::fabs(b1.K_value - std::pow(2.0 / M_PI, 2)) <= 1e-10);
  // (4,0,4): K = A(2)^4 with printed A(2) = 0.68409
  const BoydBreakdown b2 = boyd_K({4, 0, 4});
  CHECK(std::fabs(b2.K_value - std::pow(0.68409, 4)) <= 1e-4);
}

TEST_CASE("boyd_K rejects invalid triples") {
  CHECK_THROWS_AS(boyd_K({0.0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(boyd_K({2, 2, 2}), std::invalid_argument);  // q = r
  CHECK_THROWS_AS(boyd_K({2, -1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(boyd_K({2, 0.5, 1.0}), std::invalid_argument);  // r <= 1
}

TEST_CASE("K_conjugate agrees with boyd_K at r = p + q on a grid") {
  for (double p = 1; p <= 6; p += 1) {
    for (double q = 1; q <= 6; q += 1) {
      const double via_L = K_conjugate(p, q);
      const double via_I = boyd_K({p, q, p + q}).K_value;
      CHECK_MESSAGE(std::fabs(via_L - via_I) <= 2e-8 * std::max(1.0, std::fabs(via_L) * 10),
                    "p=", p, " q=", q, " L-form=", via_L, " I-form=", via_I);
    }
  }
}

TEST_CASE("K_mixed_paper reproduces the printed K(1,k) list") {
  CHECK(std::fabs(K_mixed_paper(1, 2) - 0.23961) <= 1e-4);
  CHECK(std::fabs(K_mixed_paper(1, 4) - 0.12227) <= 1e-4);
  CHECK(std::fabs(K_mixed_paper(1, 7) - 0.07055) <= 1e-4);
}

TEST_CASE("K_mixed_derived equals the direct substitution into K_conjugate") {
  CHECK(std::fabs(K_mixed_derived(1, 2) - K_conjugate(2, 2)) <= 1e-10);
  CHECK(std::fabs(K_mixed_derived(1, 2) - 0.34613) <= 1e-4);
  // frozen independent value of K_conjugate(2,4)
  CHECK(std::fabs(K_mixed_derived(2, 3) - 0.391098407246) <= 1e-8);
  CHECK(std::fabs(K_mixed_derived(2, 3) - K_conjugate(2, 4)) <= 1e-10);
}

TEST_CASE("the two K_mixed readings differ and satisfy the algebraic relation") {
  for (int k = 2; k <= 7; ++k) {
    for (int h = 1; h < k; ++h) {
      const double Kp = K_mixed_paper(h, k);
      const double Kd = K_mixed_derived(h, k);
      const LValue L = L_pq(2.0 * (k - h), 2.0 * h);
      const double scale = std::pow(k, 2.0 * h) / std::pow((k - h) * L.value + h, 2.0 * h);
      CHECK(std::fabs(Kp - Kd * scale) <= 1e-9 * std::max(1.0, Kp));
    }
  }
  CHECK(std::fabs(K_mixed_paper(1, 2) - K_mixed_derived(1, 2)) > 0.05);
}

TEST_CASE("K_mixed rejects h >= k and h < 1") {
  CHECK_THROWS_AS(K_mixed_paper(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(K_mixed_paper(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(K_mixed_derived(3, 2), std::invalid_argument);
}
