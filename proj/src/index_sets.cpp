#include "lucaslcm/index_sets.hpp"

#include <algorithm>
#include <numeric>

namespace lucaslcm {

SignPattern::SignPattern(std::string_view word) : word_(word) {
  if (word_.empty()) throw std::invalid_argument("SignPattern: empty word");
  for (char c : word_) {
    if (c != '+' && c != '-')
      throw std::invalid_argument("SignPattern: word must use only '+' and '-'");
  }
}

uint32_t SignPattern::minimal_period() const {
  const uint32_t m = period();
  for (uint32_t d = 1; d < m; ++d) {
    if (m % d) continue;
    bool ok = true;
    for (uint32_t i = d; i < m && ok; ++i) ok = (word_[i] == word_[i % d]);
    if (ok) return d;
  }
  return m;
}

bool valid_index_class(uint32_t a) {
  return a == 1 || a == 2 || a == 3 || a == 6;
}

std::vector<uint64_t> divisor_set(uint64_t a, uint64_t n) {
  if (a == 0 || n == 0) throw std::invalid_argument("divisor_set: a, n >= 1 required");
  const uint64_t an = a * n;
  std::vector<uint64_t> small, large;
  for (uint64_t d = 1; d * d <= an; ++d) {
    if (an % d) continue;
    if (std::gcd(an / d, a) == 1) small.push_back(d);
    const uint64_t e = an / d;
    if (e != d && std::gcd(d, a) == 1) large.push_back(e);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

static std::vector<uint64_t> union_of(std::vector<uint64_t> a, const std::vector<uint64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

ShiftedSupport shifted_support(uint64_t n, int s) {
  if (n < 4) throw std::invalid_argument("shifted_support: n >= 4 required");
  if (s != 1 && s != -1) throw std::invalid_argument("shifted_support: s must be +-1");
  const uint64_t k = n / 4;
  ShiftedSupport out;
  switch (n % 4) {
    case 0:  // L_{4k}-1 = L_{6k}/L_{2k},  L_{4k}+1 = F_{6k}/F_{2k}
      out.indices = (s < 0) ? divisor_set(6, 2 * k) : divisor_set(3, 2 * k);
      break;
    case 1:  // L_{4k+1}-1 = 5*F_{2k}*F_{2k+1},  L_{4k+1}+1 = L_{2k}*L_{2k+1}
      out.indices = (s < 0) ? union_of(divisor_set(1, 2 * k), divisor_set(1, 2 * k + 1))
                            : union_of(divisor_set(2, 2 * k), divisor_set(2, 2 * k + 1));
      if (s < 0) out.scalar = 5;
      break;
    case 2:  // L_{4k+2}-1 = F_{6k+3}/F_{2k+1},  L_{4k+2}+1 = L_{6k+3}/L_{2k+1}
      out.indices = (s < 0) ? divisor_set(3, 2 * k + 1) : divisor_set(6, 2 * k + 1);
      break;
    default:  // L_{4k+3}-1 = L_{2k+1}*L_{2k+2},  L_{4k+3}+1 = 5*F_{2k+1}*F_{2k+2}
      out.indices = (s < 0) ? union_of(divisor_set(2, 2 * k + 1), divisor_set(2, 2 * k + 2))
                            : union_of(divisor_set(1, 2 * k + 1), divisor_set(1, 2 * k + 2));
      if (s > 0) out.scalar = 5;
      break;
  }
  return out;
}

bool k_membership(uint32_t a, uint64_t h, const SignPattern& s) {
  return k_membership_with(a, h, [&s](uint64_t k) { return s.sign(k); });
}

std::vector<uint32_t> k_residues(uint32_t a, const SignPattern& s) {
  std::vector<uint32_t> out;
  for (uint32_t h = 1; h <= 2 * s.period(); ++h) {
    if (k_membership(a, h, s)) out.push_back(h);
  }
  return out;
}

std::vector<uint32_t> shifted_union_set(uint32_t n, const SignPattern& s) {
  if (n < 4) throw std::invalid_argument("shifted_union_set: n >= 4 required");
  std::vector<bool> mark(3 * static_cast<size_t>(n) + 1, false);
  for (uint32_t a : kIndexClasses) {
    for (uint64_t h = 1; 2 * h <= n; ++h) {
      if (!k_membership(a, h, s)) continue;
      for (uint64_t d : divisor_set(a, h)) mark[d] = true;  // d | a*h <= 3n
    }
  }
  std::vector<uint32_t> out;
  for (uint32_t d = 1; d <= 3 * n; ++d) {
    if (mark[d]) out.push_back(d);
  }
  return out;
}

bool union_contains(uint32_t d, uint32_t n, const SignPattern& s) {
  for (uint32_t a : kIndexClasses) {
    if (d % a) continue;
    const uint64_t base = d / a;
    for (uint64_t v = 1; 2 * base * v <= n; ++v) {
      if (std::gcd(v, static_cast<uint64_t>(a)) != 1) continue;
      if (k_membership(a, base * v, s)) return true;
    }
  }
  return false;
}

uint64_t union_phi_sum(uint32_t n, const SignPattern& s, const TotientTable& table) {
  if (table.size() < 3 * n) throw std::invalid_argument("union_phi_sum: table must cover 3n");
  const uint32_t dmax = 3 * n;
  uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 2048) reduction(+ : total)
  for (uint32_t d = 1; d <= dmax; ++d) {
    if (union_contains(d, n, s)) total += table.phi(d);
  }
  return total;
}

uint64_t union_phi_sum_serial(uint32_t n, const SignPattern& s, const TotientTable& table) {
  if (table.size() < 3 * n) throw std::invalid_argument("union_phi_sum_serial: table must cover 3n");
  uint64_t total = 0;
  for (uint32_t d : shifted_union_set(n, s)) total += table.phi(d);
  return total;
}

uint64_t h_count(uint32_t a, uint64_t d, const ExactRational& x) {
  if (!valid_index_class(a)) throw std::invalid_argument("h_count: a must be in {1,2,3,6}");
  if (d == 0) throw std::invalid_argument("h_count: d >= 1 required");
  if (d % a) return 0;  // H_a(d) empty unless a | d
  if (x < 0) return 0;
  long total = 0;
  for (uint64_t b = 1; b <= a; ++b) {
    if (a % b) continue;
    // floor(a*x / (b*d)) for rational x = p/q: floor(a*p / (q*b*d))
    BigInteger num = x.get_num() * static_cast<unsigned long>(a);
    BigInteger den = x.get_den() * static_cast<unsigned long>(b * d);
    BigInteger fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    total += mobius(b) * fl.get_si();
  }
  if (total < 0) throw std::logic_error("h_count: negative inclusion-exclusion total");
  return static_cast<uint64_t>(total);
}

uint64_t p_exponent(uint64_t d, uint64_t n) {
  if (d == 0 || n == 0) throw std::invalid_argument("p_exponent: d, n >= 1 required");
  switch (d % 6) {
    case 1:
    case 5: return 2 * (n / (2 * d));
    case 2:
    case 4: return 2 * (n / d);
    case 3: return (3 * n) / (2 * d) + n / (2 * d);
    default: return (3 * n) / d + n / d;  // d = 0 (mod 6)
  }
}

}  // namespace lucaslcm
