#include <cmath>

#include "doctest.h"
#include "lucaslcm/arith.hpp"
#include "lucaslcm/index_sets.hpp"
#include "lucaslcm/lcm_oracle.hpp"

using namespace lucaslcm;

TEST_CASE("shifted_lucas") {
  CHECK(shifted_lucas(1, -1) == 0);
  CHECK(shifted_lucas(1, +1) == 2);
  CHECK(shifted_lucas(5, -1) == 10);
  CHECK(shifted_lucas(4, +1) == 8);
  CHECK(shifted_lucas(2, -1) == 2);
  for (uint64_t k = 1; k <= 300; ++k) {
    REQUIRE(shifted_lucas(k, -1) == lucas(k) - 1);
    REQUIRE(shifted_lucas(k, +1) == lucas(k) + 1);
  }
}

TEST_CASE("lcm_shifted fixed values") {
  const SignPattern minus("-");
  const SignPattern plus("+");

  const LcmResult a = lcm_shifted(6, minus, 1);
  CHECK(a.value == 510);  // lcm(2,3,6,10,17), L_1 - 1 = 0 skipped
  CHECK(a.n == 6);
  CHECK(a.term_count == 5);
  CHECK(a.zero_terms_skipped == 1);
  CHECK(a.log_value == doctest::Approx(std::log(510.0)).epsilon(1e-12));

  const LcmResult b = lcm_shifted(4, plus, 4);
  CHECK(b.value == 8);
  CHECK(b.term_count == 1);
  CHECK(b.zero_terms_skipped == 0);

  const LcmResult c = lcm_shifted(8, minus, 4);
  CHECK(c.value == 164220);  // lcm(6,10,17,28,46)

  const LcmResult d = lcm_shifted(1, minus, 1);  // only the zero term
  CHECK(d.value == 1);
  CHECK(d.term_count == 0);
  CHECK(d.zero_terms_skipped == 1);
}

TEST_CASE("lcm_lucas fixed values") {
  CHECK(lcm_lucas(1).value == 1);
  CHECK(lcm_lucas(3).value == 12);
  CHECK(lcm_lucas(5).value == 924);
  CHECK(lcm_lucas(6).value == 2772);
}

TEST_CASE("lcm monotonicity and start conventions") {
  for (const std::string w : {"-", "-+"}) {
    const SignPattern s(w);
    BigInteger prev = lcm_shifted(4, s, 4).value;
    for (uint32_t n = 5; n <= 64; ++n) {
      const BigInteger cur = lcm_shifted(n, s, 4).value;
      REQUIRE(mpz_divisible_p(cur.get_mpz_t(), prev.get_mpz_t()));
      prev = cur;
    }
    // start=1 includes extra small terms: still a multiple, log gap <= 4
    const LcmResult full = lcm_shifted(64, s, 1);
    const LcmResult tail = lcm_shifted(64, s, 4);
    REQUIRE(mpz_divisible_p(full.value.get_mpz_t(), tail.value.get_mpz_t()));
    REQUIRE(full.log_value - tail.log_value >= 0.0);
    REQUIRE(full.log_value - tail.log_value <= 4.0);
  }
}

TEST_CASE("the eight shift identities hold") {
  CHECK(verify_shift_identities(1));
  CHECK(verify_shift_identities(2));
  CHECK(verify_shift_identities(50));
  for (uint64_t k = 1; k <= 64; ++k) REQUIRE(verify_shift_identities(k));
}

TEST_CASE("product formula L_n + s = e * prod Phi_d") {
  CHECK(verify_product_formula(5, -1));   // 10 = 5 * Phi_1 Phi_2 Phi_3
  CHECK(verify_product_formula(4, +1));   // 8 = Phi_3 Phi_6
  CHECK(verify_product_formula(8, -1));   // 46 = Phi_24
  for (uint64_t n = 4; n <= 120; ++n) {
    REQUIRE(verify_product_formula(n, -1));
    REQUIRE(verify_product_formula(n, +1));
  }
}

TEST_CASE("structural_log fixed value and table overload") {
  const SignPattern minus("-");
  const double expected = 30.0 * GoldenRatioConstants::log_alpha;
  CHECK(structural_log(8, minus) == doctest::Approx(expected).epsilon(1e-12));
  const TotientTable table(3 * 8);
  CHECK(structural_log(8, minus, table) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("structural sum tracks log lcm within the O(n) band") {
  // |log l_s(n) - structural_log(n,s)| <= 8n on the acceptance grid, and the
  // n^2-normalized gap shrinks as n doubles.
  for (const std::string w : {"-", "+", "+-", "--++"}) {
    const SignPattern s(w);
    double prev_norm = 1e300;
    for (uint32_t n : {100, 200, 400}) {
      const double exact = lcm_shifted(n, s, 1).log_value;
      const double structural = structural_log(n, s);
      const double diff = std::fabs(exact - structural);
      REQUIRE(diff <= 8.0 * n);
      const double norm = diff / (double(n) * double(n));
      REQUIRE(norm < prev_norm);
      prev_norm = norm;
    }
  }
}
