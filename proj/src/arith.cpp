#include "lucaslcm/arith.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace lucaslcm {

ExactRational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

BigInteger fib(uint64_t n) {
  BigInteger a = 0, b = 1;  // (F_0, F_1)
  for (uint64_t i = 0; i < n; ++i) {
    a += b;
    mpz_swap(a.get_mpz_t(), b.get_mpz_t());
  }
  return a;
}

BigInteger lucas(uint64_t n) {
  BigInteger a = 2, b = 1;  // (L_0, L_1)
  if (n == 0) return a;
  for (uint64_t i = 1; i < n; ++i) {
    a += b;
    mpz_swap(a.get_mpz_t(), b.get_mpz_t());
  }
  return b;
}

static std::vector<uint64_t> divisors_of(uint64_t n) {
  std::vector<uint64_t> small, large;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInteger cyclotomic_phi(uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_phi: n >= 1 required");
  if (n == 1) return 1;
  BigInteger num = 1, den = 1;  // prod F_d^{mu(n/d)}, split by sign of mu
  for (uint64_t d : divisors_of(n)) {
    int mu = mobius(n / d);
    if (mu == 1)
      num *= fib(d);
    else if (mu == -1)
      den *= fib(d);
  }
  BigInteger q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0 || q <= 0)
    throw std::logic_error("cyclotomic_phi: Moebius product must divide exactly");
  return q;
}

uint64_t euler_phi(uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n >= 1 required");
  uint64_t result = n;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n >= 1 required");
  int factors = 0;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;  // squared factor
    ++factors;
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

unsigned p_adic_valuation(uint64_t p, const BigInteger& x) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p_adic_valuation: p must be prime");
  if (x == 0) throw std::invalid_argument("p_adic_valuation: x must be nonzero");
  BigInteger rest, pz = static_cast<unsigned long>(p);
  mp_bitcnt_t v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return static_cast<unsigned>(v);
}

unsigned p_adic_valuation(uint64_t p, uint64_t x) {
  return p_adic_valuation(p, BigInteger(static_cast<unsigned long>(x)));
}

BigInteger big_gcd(const BigInteger& a, const BigInteger& b) {
  BigInteger g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInteger big_lcm(const BigInteger& a, const BigInteger& b) {
  BigInteger l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

static uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for n < 2^64 (Sinclair).
  for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    uint64_t x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t rank_of_apparition(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("rank_of_apparition: p must be prime");
  if (p >= (1ull << 32)) throw std::invalid_argument("rank_of_apparition: p < 2^32 required");
  uint64_t a = 0, b = 1;  // (F_n, F_{n+1}) mod p
  for (uint64_t n = 1; n <= p + 1; ++n) {
    uint64_t next = (a + b) % p;
    a = b;
    b = next;  // now (F_n, F_{n+1})
    if (a == 0) return n;
  }
  throw std::logic_error("rank_of_apparition: z(p) <= p + 1 violated");
}

double log_bigint(const BigInteger& x) {
  if (x <= 0) throw std::invalid_argument("log_bigint: x >= 1 required");
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, x.get_mpz_t());  // x = d * 2^exp2, d in [0.5, 1)
  return std::log(d) + static_cast<double>(exp2) * M_LN2;
}

TotientTable::TotientTable(uint32_t n) : phi_(static_cast<size_t>(n) + 1) {
  for (uint32_t i = 0; i <= n; ++i) phi_[i] = i;
  for (uint32_t p = 2; p <= n; ++p) {
    if (phi_[p] != p) continue;  // p composite: already reduced
    for (uint32_t k = p; k <= n; k += p) phi_[k] -= phi_[k] / p;
  }
}

}  // namespace lucaslcm
