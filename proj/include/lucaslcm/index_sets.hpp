#pragma once

// Combinatorial index-set families controlling the factor structure of
// shifted Lucas numbers:
//
//   D_a(n)   = { d : d | a*n, gcd(a*n/d, a) = 1 }
//   E_s(n), e_s(n): support of L_n + s = e_s(n) * prod_{d in E_s(n)} Phi_d
//   K_{a,s}: sign conditions selecting admissible h per class a in {1,2,3,6}
//   L_s(n)   = union over a and h <= n/2, h in K_{a,s}, of D_a(h)
//   H_a(d)   = { (d/a)*v : gcd(a,v) = 1 } when a | d (else empty)
//   P(d,n)   = piecewise exponent by d mod 6
//
// The union L_s(n) has two implementations: an explicit h-loop enumeration
// (serial reference) and a per-d membership test that parallelizes cleanly;
// both are exposed and tested against each other.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lucaslcm/arith.hpp"

namespace lucaslcm {

// An m-periodic word over {-1,+1}; s(k) = word[(k-1) mod m] for k >= 1.
// Parses from ASCII '+' / '-' (e.g. "--++").
class SignPattern {
 public:
  explicit SignPattern(std::string_view word);

  int sign(uint64_t k) const {  // k >= 1
    return word_[(k - 1) % word_.size()] == '+' ? +1 : -1;
  }
  uint32_t period() const { return static_cast<uint32_t>(word_.size()); }
  uint32_t minimal_period() const;
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

// The multiplier classes a in {1,2,3,6} used by the K-set machinery.
inline constexpr std::array<uint32_t, 4> kIndexClasses{1, 2, 3, 6};
bool valid_index_class(uint32_t a);

// Factorization scalar + index set with L_n + s = e * prod_{d in E} Phi_d.
struct ShiftedSupport {
  unsigned scalar = 1;             // e_s(n), 1 or 5
  std::vector<uint64_t> indices;   // E_s(n), sorted
};

// D_a(n) as a sorted vector; divisors found by trial division up to
// sqrt(a*n). The multiplier a may be any positive integer (the set identity
// D_{ap}(n) = D_a(pn) \ D_a(n) ranges over products like 10 or 15).
std::vector<uint64_t> divisor_set(uint64_t a, uint64_t n);

// (e_s(n), E_s(n)) for n >= 4, s in {-1,+1}, per the eight-case table on
// n mod 4. Union cases (n odd) merge two D-sets as a plain set union.
ShiftedSupport shifted_support(uint64_t n, int s);

// K_{a,s} membership for index h >= 1, evaluated from any sign source
// (sign(k) -> +-1). The h <= n/2 cap is the caller's responsibility so the
// same predicate serves enumeration and residue extraction.
template <typename SignFn>
bool k_membership_with(uint32_t a, uint64_t h, SignFn&& sign) {
  const int ph = (h % 2 == 0) ? +1 : -1;  // (-1)^h
  switch (a) {
    case 1: return sign(2 * h - 1) == ph || sign(2 * h + 1) == -ph;
    case 2: return sign(2 * h - 1) == -ph || sign(2 * h + 1) == ph;
    case 3: return sign(2 * h) == ph;
    case 6: return sign(2 * h) == -ph;
    default: throw std::invalid_argument("k_membership: a must be in {1,2,3,6}");
  }
}
bool k_membership(uint32_t a, uint64_t h, const SignPattern& s);

// { h in [1, 2m] : k_membership(a, h, s) }; valid because membership is
// 2m-periodic in h (parity and pattern position both repeat).
std::vector<uint32_t> k_residues(uint32_t a, const SignPattern& s);

// L_s(n) by explicit enumeration (serial reference); sorted, subset of [1,3n].
std::vector<uint32_t> shifted_union_set(uint32_t n, const SignPattern& s);

// Membership d in L_s(n) tested through H_a(d): d in D_a(h) iff a | d and
// h = (d/a)*v with gcd(a,v) = 1, so scan v while 2*(d/a)*v <= n.
bool union_contains(uint32_t d, uint32_t n, const SignPattern& s);

// Sum of phi(d) over d in L_s(n). The first form is an OpenMP kernel over d
// (order-insensitive integer reduction, deterministic for any thread count);
// the second is the serial reference built on shifted_union_set. The table
// must cover [1, 3n].
uint64_t union_phi_sum(uint32_t n, const SignPattern& s, const TotientTable& table);
uint64_t union_phi_sum_serial(uint32_t n, const SignPattern& s, const TotientTable& table);

// #(H_a(d) meet [1, x]) = sum_{b | a} mu(b) * floor(a*x / (b*d)) when a | d,
// else 0. Exact for rational x (the consistency checks evaluate at x = n/2).
uint64_t h_count(uint32_t a, uint64_t d, const ExactRational& x);

// P(d, n), piecewise by d mod 6:
//   d = 1,5 (mod 6): 2*floor(n/(2d))      d = 2,4 (mod 6): 2*floor(n/d)
//   d = 3 (mod 6):   floor(3n/(2d)) + floor(n/(2d))
//   d = 0 (mod 6):   floor(3n/d) + floor(n/d)
uint64_t p_exponent(uint64_t d, uint64_t n);

}  // namespace lucaslcm
