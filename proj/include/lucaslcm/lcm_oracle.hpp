#pragma once

// Exact big-integer oracles: shifted Lucas terms L_k + s_k, their running
// lcm ell_s(n), the unshifted Lucas lcm, identity checkers for the eight
// shifted-product identities and the Phi-product formula, and the structural
// totient-sum approximation
//
//   structural_log(n, s) = log(alpha) * sum_{d in L_s(n)} phi(d),
//
// which tracks log ell_s(n) up to an O(n) error.

#include <cstdint>

#include "lucaslcm/arith.hpp"
#include "lucaslcm/index_sets.hpp"

namespace lucaslcm {

struct LcmResult {
  uint32_t n = 0;
  BigInteger value = 1;
  double log_value = 0.0;          // log(value), >= 10 significant digits
  uint32_t term_count = 0;         // nonzero terms included
  uint32_t zero_terms_skipped = 0; // only L_1 - 1 = 0 can occur
};

// L_k + s as exact integer (0 exactly for k = 1, s = -1).
BigInteger shifted_lucas(uint64_t k, int s);

// Running lcm of the nonzero terms L_k + s(k) for k = start..n. start is 1
// (full range) or 4 (the ell_s convention, which skips the irregular small
// indices). If every term in range is zero the result is 1 with term_count 0.
LcmResult lcm_shifted(uint32_t n, const SignPattern& s, uint32_t start = 1);

// lcm(L_1, ..., L_n).
LcmResult lcm_lucas(uint32_t n);

// The eight identities at index k (exact, with divisibility checked before
// each exact division):
//   L_{4k}-1   = L_{6k}/L_{2k}        L_{4k}+1   = F_{6k}/F_{2k}
//   L_{4k+1}-1 = 5 F_{2k} F_{2k+1}    L_{4k+1}+1 = L_{2k} L_{2k+1}
//   L_{4k+2}-1 = F_{6k+3}/F_{2k+1}    L_{4k+2}+1 = L_{6k+3}/L_{2k+1}
//   L_{4k+3}-1 = L_{2k+1} L_{2k+2}    L_{4k+3}+1 = 5 F_{2k+1} F_{2k+2}
bool verify_shift_identities(uint64_t k);

// L_n + s == e_s(n) * prod_{d in E_s(n)} Phi_d, exactly. n >= 4.
bool verify_product_formula(uint64_t n, int s);

// log(alpha) * sum of phi over L_s(n); the table overload must cover [1,3n].
double structural_log(uint32_t n, const SignPattern& s);
double structural_log(uint32_t n, const SignPattern& s, const TotientTable& table);

}  // namespace lucaslcm
