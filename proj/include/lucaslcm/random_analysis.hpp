#pragma once

// Machinery for uniformly random signs: dilogarithm series Li_2(z) and
// Li_2(z; a), the weighted totient-sum constant T_q(z, w), the closed-form
// constant
//
//   C = 243/128 + (27/8) Li_2(1/4) + (9/8) Li_2(1/16)
//       + (3/16) Li_2(1/16; 1/3) + (3/32) Li_2(1/16; 2/3)  ~ 2.8821,
//
// its four-part residue-class decomposition, the exact expectation sum
// sum_{d <= 3n} phi(d) (1 - 2^{-P(d,n)}), numeric validation of the
// phi-sum asymptotic (3/pi^2) c_{r,m} T_q(z,w) x^2, and a reproducible
// Monte Carlo simulation of log lcm(L_1 + s_1, ..., L_n + s_n).

#include <cstdint>
#include <utility>
#include <vector>

#include "lucaslcm/index_sets.hpp"
#include "lucaslcm/lcm_oracle.hpp"

namespace lucaslcm {

struct SeriesConfig {
  double tolerance = 1e-15;   // stop once the next term falls below this
  uint64_t max_terms = 1000000;
};

// Li_2(z) = sum_{k>=1} z^k / k^2 for z in [0,1]; z = 1 returns pi^2/6.
double dilog(double z, const SeriesConfig& cfg = {});

// Li_2(z; a) = sum_{k>=1} z^k / (k+a)^2 for z in [0,1), a >= 0. z = 1 is
// rejected (never needed; the series bound degenerates there).
double dilog_shifted(double z, double a, const SeriesConfig& cfg = {});

// T_q(z, w) three-branch evaluation:
//   1                                      if z = 0
//   (1-z) Li_2(z) / z                      if z > 0, w = 1
//   (1-zw) Li_2(z^q w)/(q^2 z w)
//     + (1-z)/z sum_{j=1}^{q-1} z^j (1/j^2 + Li_2(z^q w; j/q)/q^2)
//                                          if z > 0, w < 1
double t_q(double z, double w, uint32_t q, const SeriesConfig& cfg = {});

// The z > 0 branch formula evaluated without dispatching on w (valid for
// 0 <= w <= 1; continuous at w = 1). Exposed so the branch-consistency
// identity t_q_general_branch(z, 1, q) == (1-z) Li_2(z) / z is testable.
double t_q_general_branch(double z, double w, uint32_t q, const SeriesConfig& cfg = {});

// The five-term closed form of C.
double c_closed_form(const SeriesConfig& cfg = {});

// C assembled from the four residue-class contributions of its derivation:
//   (9/8) Li_2(1/4) + (9/4) Li_2(1/4)
//   + (81/128 + (3/8) Li_2(1/16) + (1/16) Li_2(1/16;1/3) + (1/32) Li_2(1/16;2/3))
//   + (81/64  + (3/4) Li_2(1/16) + (1/8)  Li_2(1/16;1/3) + (1/16) Li_2(1/16;2/3))
double c_from_decomposition(const SeriesConfig& cfg = {});

// sum_{d=1}^{3n} phi(d) (1 - 2^{-P(d,n)}). The formula is applied for all d
// including d < 12, where the probability model is only asymptotic — the
// deviation is O(1) and irrelevant to the n^2 constant. The first form is an
// OpenMP kernel (fixed-block partial sums, bitwise deterministic for any
// thread count); the second is the plain serial reference.
double expected_structural_sum(uint32_t n);
double expected_structural_sum_serial(uint32_t n);

// Direct summation of sum_{n' <= x, n' = r (mod m)} phi(n') (1 - z^floor(x/n') w^floor(x/(q n')))
// against the asymptotic main term. Returns (lhs / x^2, (3/pi^2) c_{r,m} T_q(z,w)).
std::pair<double, double> phisum_check(uint64_t r, uint64_t m, uint32_t q, double z, double w,
                                       uint64_t x);

// splitmix64 step: advances state and returns the mixed output.
uint64_t splitmix64_next(uint64_t& state);

// Counter-based per-trial sign stream: trial key = seed ^ (golden * (trial+1)),
// sign_k = +1 if bit 0 of the k-th output is set, else -1. Reproducible for
// any execution order of trials.
std::vector<int8_t> trial_signs(uint64_t seed, uint64_t trial, uint32_t n);

// log lcm(L_1 + s_1, ..., L_n + s_n) for an explicit sign vector (zero terms
// skipped); the Monte Carlo path for one trial, exposed for stub testing.
double trial_log_lcm(const std::vector<int8_t>& signs);

struct MonteCarloReport {
  uint32_t n = 0;
  uint32_t trials = 0;
  uint64_t seed = 0;
  std::vector<double> trial_logs;  // indexed by trial
  double mean = 0.0;
  double stddev = 0.0;      // sample standard deviation (N-1), 0 for one trial
  double normalized = 0.0;  // mean * pi^2 / (n^2 log alpha)
};

// trials independent draws of n signs; trial i is keyed by (seed, i), so the
// report is identical regardless of execution order. Parallelized over
// trials; aggregation runs serially in trial order. n <= 1000 (bigint cap).
MonteCarloReport monte_carlo(uint32_t n, uint32_t trials, uint64_t seed);

}  // namespace lucaslcm
