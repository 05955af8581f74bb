#pragma once

// Exhaustive desk-scale verification suites for the factorization lemmas.
// Each suite runs a closed grid of exact checks and reports the number of
// checks, the number of failures, and a printable first counterexample.

#include <cstdint>
#include <string>
#include <vector>

namespace lucaslcm {

struct SuiteResult {
  std::string name;
  uint64_t checks = 0;
  uint64_t failures = 0;
  std::string first_failure;  // empty when all checks pass

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

// The eight shifted-product identities, k = 1..k_max.
SuiteResult suite_shift_identities(uint64_t k_max);

// L_n + s = e_s(n) prod Phi_d for n = 4..n_max, both signs.
SuiteResult suite_product_formula(uint64_t n_max);

// Structure of Phi_n for n = 1..n_max: prod_{d|n} Phi_d = F_n; every prime
// p | Phi_n has n = z(p) p^v; for v >= 1 the prime divides Phi_n exactly once
// except (p, n) = (2, 6) where it divides exactly twice. Primes of Phi_n not
// dividing n are certified without factoring: after stripping the primes of
// n, the residual must be coprime to F_d for every proper divisor d of n.
SuiteResult suite_phi_structure(uint64_t n_max);

// D_{ap}(n) = D_a(pn) \ D_a(n) for a in {1,2,3}, p in {2,3,5} with p not
// dividing a, n = 1..n_max.
SuiteResult suite_divisor_set_identity(uint64_t n_max);

// H_a(d) counts and disjointness: brute membership {h : d in D_a(h)} vs the
// arithmetic description (d/a)v and vs h_count, for d <= d_max and sampled
// cutoffs x <= x_max; H_a and H_b disjoint for a != b.
SuiteResult suite_h_counts(uint64_t d_max, uint64_t x_max);

// Union-decomposition identity: the union of D_a(h) over h = r (mod m),
// h <= x equals the decomposition's progressions, exactly, for every
// a in {1,2,3,6}, m <= m_max, r <= m and sampled x <= x_max.
SuiteResult suite_union_decomposition(uint64_t m_max, uint64_t x_max);

// P(d, n) = 2 #H_1 + 2 #H_2 + #H_3 + #H_6 at x = n/2, d in [12, d_max],
// n in [1, n_max].
SuiteResult suite_p_exponent_consistency(uint64_t d_max, uint64_t n_max);

// Exhaustive sign enumeration on the positions feeding membership of d in
// L_s(n): the fraction of assignments with d present must equal
// 1 - 2^{-P(d,n)} exactly as a dyadic rational. d in [12, d_max], n in
// [4, n_max].
SuiteResult suite_membership_probability(uint64_t d_max, uint64_t n_max);

// All of the above at the canonical acceptance bounds.
std::vector<SuiteResult> run_all_suites();

}  // namespace lucaslcm
