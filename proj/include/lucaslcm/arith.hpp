#pragma once

// Arbitrary-precision arithmetic core: Fibonacci/Lucas generation, homogeneous
// cyclotomic values Phi_n, standard arithmetic functions (phi, mu, nu_p),
// rank of apparition z(p), and a totient sieve.
//
// Conventions (fixed throughout the project):
//   F_1 = F_2 = 1,  L_1 = 1, L_2 = 3  (L_0 = 2 exposed for identity checks)
//   Phi_1 = 1,      F_n = prod_{d | n} Phi_d
//
// BigInteger / ExactRational are backed by GMP (mpz_class / mpq_class); all
// public contracts below are stated independently of that backing.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace lucaslcm {

using BigInteger = mpz_class;
using ExactRational = mpq_class;

// High-precision constants; literals carry >= 30 significant digits and are
// validated by identity tests (alpha^2 = alpha + 1, alpha * beta = -1).
struct GoldenRatioConstants {
  static constexpr double alpha = 1.6180339887498948482045868343656381177203;
  static constexpr double beta = -0.6180339887498948482045868343656381177203;
  static constexpr double log_alpha = 0.4812118250596034474977589134243684231352;
  static constexpr double pi_squared = 9.8696044010893586188344909998761511353137;
};

// Reduced fraction num/den (den != 0); result is canonical.
ExactRational make_rational(long num, long den);

// F_n for n >= 0 by integer recurrence (never floating Binet). n = 0 gives 0.
BigInteger fib(uint64_t n);

// L_n for n >= 0 by integer recurrence; L_0 = 2 is exposed for identity tests.
BigInteger lucas(uint64_t n);

// Phi_1 = 1; for n >= 2, Phi_n = prod_{d | n} F_d^{mu(n/d)} computed as an
// exact quotient of two positive products. Non-exact division is a hard
// failure (internal arithmetic bug).
BigInteger cyclotomic_phi(uint64_t n);

// Euler's totient by trial-division factorization. n >= 1.
uint64_t euler_phi(uint64_t n);

// Moebius function by trial-division factorization. n >= 1.
int mobius(uint64_t n);

// nu_p(x): exponent of the prime p in x (x != 0). Composite p is rejected.
unsigned p_adic_valuation(uint64_t p, const BigInteger& x);
unsigned p_adic_valuation(uint64_t p, uint64_t x);

// gcd / lcm on BigInteger; lcm(0, b) = 0.
BigInteger big_gcd(const BigInteger& a, const BigInteger& b);
BigInteger big_lcm(const BigInteger& a, const BigInteger& b);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(uint64_t n);

// z(p): least n >= 1 with p | F_n, found by scanning F mod p. The scan is
// bounded by z(p) <= p + 1. Composite input is rejected. Requires p < 2^32.
uint64_t rank_of_apparition(uint64_t p);

// log(x) for x >= 1 via (bit length, leading bits); accurate to ~1 ulp of
// double even when x has tens of thousands of digits.
double log_bigint(const BigInteger& x);

// Sieved phi(d) for 1 <= d <= n; immutable after construction and safe to
// share across threads.
class TotientTable {
 public:
  explicit TotientTable(uint32_t n);

  uint32_t size() const { return static_cast<uint32_t>(phi_.size() - 1); }
  uint64_t phi(uint32_t d) const { return phi_[d]; }

 private:
  std::vector<uint32_t> phi_;
};

}  // namespace lucaslcm
