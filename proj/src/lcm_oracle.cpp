#include "lucaslcm/lcm_oracle.hpp"

#include <stdexcept>

namespace lucaslcm {

BigInteger shifted_lucas(uint64_t k, int s) {
  if (k == 0) throw std::invalid_argument("shifted_lucas: k >= 1 required");
  if (s != 1 && s != -1) throw std::invalid_argument("shifted_lucas: s must be +-1");
  return lucas(k) + s;
}

LcmResult lcm_shifted(uint32_t n, const SignPattern& s, uint32_t start) {
  if (start != 1 && start != 4) throw std::invalid_argument("lcm_shifted: start must be 1 or 4");
  if (n < start) throw std::invalid_argument("lcm_shifted: n >= start required");
  LcmResult out;
  out.n = n;
  BigInteger a = 2, b = 1;  // (L_0, L_1)
  for (uint32_t k = 1; k <= n; ++k) {
    if (k >= 2) {
      a += b;
      mpz_swap(a.get_mpz_t(), b.get_mpz_t());  // b = L_k
    }
    if (k < start) continue;
    BigInteger term = b + s.sign(k);
    if (term == 0) {
      ++out.zero_terms_skipped;
      continue;
    }
    out.value = big_lcm(out.value, term);
    ++out.term_count;
  }
  out.log_value = log_bigint(out.value);
  return out;
}

LcmResult lcm_lucas(uint32_t n) {
  if (n == 0) throw std::invalid_argument("lcm_lucas: n >= 1 required");
  LcmResult out;
  out.n = n;
  BigInteger a = 2, b = 1;  // (L_0, L_1)
  for (uint32_t k = 1; k <= n; ++k) {
    if (k >= 2) {
      a += b;
      mpz_swap(a.get_mpz_t(), b.get_mpz_t());
    }
    out.value = big_lcm(out.value, b);
    ++out.term_count;
  }
  out.log_value = log_bigint(out.value);
  return out;
}

// lhs == num/den, where failure of exact division counts as a violation.
static bool equals_quotient(const BigInteger& lhs, const BigInteger& num, const BigInteger& den) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
  BigInteger q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return lhs == q;
}

bool verify_shift_identities(uint64_t k) {
  if (k == 0) throw std::invalid_argument("verify_shift_identities: k >= 1 required");
  // F and L up to index 6k+3, built once.
  const uint64_t top = 6 * k + 3;
  std::vector<BigInteger> F(top + 1), L(top + 1);
  F[0] = 0;
  F[1] = 1;
  L[0] = 2;
  L[1] = 1;
  for (uint64_t i = 2; i <= top; ++i) {
    F[i] = F[i - 1] + F[i - 2];
    L[i] = L[i - 1] + L[i - 2];
  }
  bool ok = true;
  ok &= equals_quotient(L[4 * k] - 1, L[6 * k], L[2 * k]);
  ok &= equals_quotient(L[4 * k] + 1, F[6 * k], F[2 * k]);
  ok &= (L[4 * k + 1] - 1 == 5 * F[2 * k] * F[2 * k + 1]);
  ok &= (L[4 * k + 1] + 1 == L[2 * k] * L[2 * k + 1]);
  ok &= equals_quotient(L[4 * k + 2] - 1, F[6 * k + 3], F[2 * k + 1]);
  ok &= equals_quotient(L[4 * k + 2] + 1, L[6 * k + 3], L[2 * k + 1]);
  ok &= (L[4 * k + 3] - 1 == L[2 * k + 1] * L[2 * k + 2]);
  ok &= (L[4 * k + 3] + 1 == 5 * F[2 * k + 1] * F[2 * k + 2]);
  return ok;
}

bool verify_product_formula(uint64_t n, int s) {
  const ShiftedSupport sup = shifted_support(n, s);  // validates n, s
  BigInteger rhs = sup.scalar;
  for (uint64_t d : sup.indices) rhs *= cyclotomic_phi(d);
  return shifted_lucas(n, s) == rhs;
}

double structural_log(uint32_t n, const SignPattern& s) {
  TotientTable table(3 * n);
  return structural_log(n, s, table);
}

double structural_log(uint32_t n, const SignPattern& s, const TotientTable& table) {
  return GoldenRatioConstants::log_alpha *
         static_cast<double>(union_phi_sum(n, s, table));
}

}  // namespace lucaslcm
