#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "lucaslcm/arith.hpp"

using namespace lucaslcm;

TEST_CASE("golden ratio constants satisfy their defining identities") {
  const double a = GoldenRatioConstants::alpha;
  const double b = GoldenRatioConstants::beta;
  CHECK(a * a == doctest::Approx(a + 1.0).epsilon(1e-15));
  CHECK(b * b == doctest::Approx(b + 1.0).epsilon(1e-15));
  CHECK(a * b == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(a + b == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(GoldenRatioConstants::log_alpha == doctest::Approx(std::log(a)).epsilon(1e-15));
  CHECK(GoldenRatioConstants::pi_squared ==
        doctest::Approx(M_PI * M_PI).epsilon(1e-15));
}

TEST_CASE("make_rational canonicalizes") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(1, -2) == make_rational(-1, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK(make_rational(81, 128) + make_rational(81, 64) == make_rational(243, 128));
}

TEST_CASE("fib and lucas match the GMP reference generators") {
  // mpz_fib_ui / mpz_lucnum_ui are an independent implementation of the
  // recurrences; the library must agree term by term.
  for (uint64_t n = 0; n <= 500; ++n) {
    BigInteger f_ref, l_ref;
    mpz_fib_ui(f_ref.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_lucnum_ui(l_ref.get_mpz_t(), static_cast<unsigned long>(n));
    REQUIRE(fib(n) == f_ref);
    REQUIRE(lucas(n) == l_ref);
  }
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(2) == 3);
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(10) == 55);
  CHECK(lucas(10) == 123);
}

TEST_CASE("cyclotomic_phi fixed values and the product formula") {
  CHECK(cyclotomic_phi(1) == 1);
  CHECK(cyclotomic_phi(2) == 1);
  CHECK(cyclotomic_phi(3) == 2);
  CHECK(cyclotomic_phi(4) == 3);
  CHECK(cyclotomic_phi(5) == 5);
  CHECK(cyclotomic_phi(6) == 4);
  CHECK(cyclotomic_phi(9) == 17);
  CHECK(cyclotomic_phi(12) == 6);
  CHECK(cyclotomic_phi(24) == 46);

  // F_n = prod_{d | n} Phi_d
  for (uint64_t n = 1; n <= 200; ++n) {
    BigInteger prod = 1;
    for (uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) prod *= cyclotomic_phi(d);
    }
    REQUIRE(prod == fib(n));
  }
}

TEST_CASE("log Phi_n stays within a bounded band of phi(n) log alpha") {
  // |log Phi_n - phi(n) log alpha| is O(1); 2.0 is a comfortable band on
  // n <= 2000 (the worst observed value is below 1).
  const uint32_t n_max = 2000;
  std::vector<BigInteger> F(n_max + 1);
  F[0] = 0;
  F[1] = 1;
  for (uint32_t i = 2; i <= n_max; ++i) F[i] = F[i - 1] + F[i - 2];

  const auto phi_of = [&F](uint64_t k) {
    BigInteger num = 1, den = 1;
    for (uint64_t e = 1; e <= k; ++e) {
      if (k % e) continue;
      const int mu = mobius(k / e);
      if (mu == 1) num *= F[e];
      if (mu == -1) den *= F[e];
    }
    BigInteger q;
    REQUIRE(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
  };

  double worst = 0.0;
  for (uint64_t n = 2; n <= n_max; ++n) {
    const BigInteger phi_n = phi_of(n);
    if (n <= 300) REQUIRE(phi_n == cyclotomic_phi(n));  // cache vs production
    const double gap =
        std::fabs(log_bigint(phi_n) -
                  double(euler_phi(n)) * GoldenRatioConstants::log_alpha);
    worst = std::max(worst, gap);
  }
  CHECK(worst <= 2.0);
}

TEST_CASE("euler_phi agrees with the sieve") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  const TotientTable table(10000);
  REQUIRE(table.size() == 10000);
  for (uint32_t d = 1; d <= 10000; ++d) REQUIRE(table.phi(d) == euler_phi(d));
}

TEST_CASE("mobius values and the divisor-sum identity") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  for (uint64_t n = 1; n <= 1000; ++n) {
    int sum = 0;
    for (uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) sum += mobius(d);
    }
    REQUIRE(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("p-adic valuation") {
  CHECK(p_adic_valuation(2, uint64_t{48}) == 4);
  CHECK(p_adic_valuation(3, uint64_t{48}) == 1);
  CHECK(p_adic_valuation(5, uint64_t{48}) == 0);
  BigInteger big = 1;
  for (int i = 0; i < 30; ++i) big *= 7;
  CHECK(p_adic_valuation(7, big) == 30);
  CHECK(p_adic_valuation(7, big * 11) == 30);
}

TEST_CASE("big gcd and lcm") {
  CHECK(big_gcd(BigInteger(12), BigInteger(18)) == 6);
  CHECK(big_lcm(BigInteger(4), BigInteger(6)) == 12);
  CHECK(big_lcm(BigInteger(0), BigInteger(5)) == 0);
  // gcd(F_m, F_n) = F_gcd(m,n)
  for (uint64_t m = 1; m <= 60; ++m) {
    for (uint64_t n = 1; n <= 60; ++n) {
      REQUIRE(big_gcd(fib(m), fib(n)) == fib(std::gcd(m, n)));
    }
  }
}

TEST_CASE("deterministic Miller-Rabin") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));    // Carmichael
  CHECK_FALSE(is_prime_u64(1729));   // Carmichael
  CHECK(is_prime_u64((uint64_t{1} << 61) - 1));  // Mersenne prime
  CHECK_FALSE(is_prime_u64(3825123056546413051ull));  // strong pseudoprime stressor
  // agree with trial division on a dense range
  for (uint64_t n = 2; n <= 3000; ++n) {
    bool ref = true;
    for (uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        ref = false;
        break;
      }
    }
    REQUIRE(is_prime_u64(n) == ref);
  }
}

TEST_CASE("rank of apparition") {
  CHECK(rank_of_apparition(2) == 3);
  CHECK(rank_of_apparition(3) == 4);
  CHECK(rank_of_apparition(5) == 5);
  CHECK(rank_of_apparition(7) == 8);
  CHECK(rank_of_apparition(11) == 10);
  CHECK(rank_of_apparition(13) == 7);
  for (uint64_t p = 2; p <= 300; ++p) {
    if (!is_prime_u64(p)) continue;
    const uint64_t z = rank_of_apparition(p);
    REQUIRE(z <= p + 1);
    REQUIRE(mpz_divisible_p(fib(z).get_mpz_t(), BigInteger(p).get_mpz_t()));
    for (uint64_t d = 1; d < z; ++d) {  // minimality
      REQUIRE_FALSE(mpz_divisible_p(fib(d).get_mpz_t(), BigInteger(p).get_mpz_t()));
    }
  }
}

TEST_CASE("log_bigint on huge integers") {
  CHECK(log_bigint(BigInteger(1)) == 0.0);
  BigInteger two100 = 1;
  mpz_mul_2exp(two100.get_mpz_t(), two100.get_mpz_t(), 100);
  CHECK(log_bigint(two100) == doctest::Approx(100.0 * M_LN2).epsilon(1e-14));

  BigInteger ten50 = 1;
  for (int i = 0; i < 50; ++i) ten50 *= 10;
  CHECK(log_bigint(ten50) == doctest::Approx(50.0 * std::log(10.0)).epsilon(1e-14));

  // log F_n = n log alpha - (1/2) log 5 + o(1), already tight at n = 500
  const double expected = 500.0 * GoldenRatioConstants::log_alpha - 0.5 * std::log(5.0);
  CHECK(log_bigint(fib(500)) == doctest::Approx(expected).epsilon(1e-12));

  // multiplicativity
  const BigInteger x = fib(301), y = lucas(300);
  CHECK(log_bigint(x * y) == doctest::Approx(log_bigint(x) + log_bigint(y)).epsilon(1e-13));
}
