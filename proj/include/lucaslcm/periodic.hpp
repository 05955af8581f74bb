#pragma once

// Constructive computation of the exact rational growth constant B_s for an
// m-periodic sign pattern s:
//
//   1. k_residues(a, s) gives the admissible residues R_{a,s} in [1, 2m];
//      the h <= n/2 cap contributes the bound coefficient kappa = 1/2.
//   2. Each union  U_{h = r (mod 2m), h <= n/2} D_a(h)  decomposes into
//      arithmetic progressions A_{a*t, 2am}(a*(n/2)/u) over the coset
//      solutions (t, u) of t*u = r (mod 2m), gcd(a, u) = 1, u minimal.
//   3. All progressions refine to the common modulus M = 12m and merge per
//      residue by the max rule (initial segments of one residue class nest).
//   4. B_s = 3 * sum_rho c_{rho,M} * lambda_rho^2, exactly, where
//      c_{r,m} = (1/m) prod_{p|m, p|r} (1+1/p)^-1 prod_{p|m, p!|r} (1-1/p^2)^-1.
//
// Everything is exact rational arithmetic end to end.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lucaslcm/arith.hpp"
#include "lucaslcm/index_sets.hpp"

namespace lucaslcm {

// A_{r,M}(lambda*n) = { d <= lambda*n : d = r (mod M) }, residue in [1, M].
struct Progression {
  uint64_t residue = 1;
  uint64_t modulus = 1;
  ExactRational lambda;
};

// (t, u) with t*u = r (mod m), gcd(a, u) = 1, u minimal.
struct CosetSolution {
  uint64_t t = 0;
  uint64_t u = 0;
};

struct BsReport {
  std::string pattern;
  ExactRational B;
  uint64_t modulus = 0;                       // common modulus M
  std::map<uint64_t, ExactRational> lambda;   // residue -> max coefficient
  std::map<uint64_t, ExactRational> density;  // residue -> c_{rho,M}
};

// For each t in [1, m], search u = 1..a*m for t*u = r (mod m) with
// gcd(a, u) = 1; include (t, minimal u) when found. The bound a*m suffices
// because both conditions on u are jointly periodic with period dividing a*m.
std::vector<CosetSolution> coset_solutions(uint32_t a, uint64_t r, uint64_t m);

// Decomposition of U_{h in A_{r,m}(kappa*n)} D_a(h) into progressions
// { (a*t, a*m, kappa*a/u) : (t, u) in coset_solutions(a, r, m) }.
std::vector<Progression> union_decomposition(uint32_t a, uint64_t r, uint64_t m,
                                             const ExactRational& kappa);

// Refine every progression to the common modulus M (M must be a multiple of
// each input modulus) and merge residues by keeping the max lambda.
std::map<uint64_t, ExactRational> refine_and_merge(const std::vector<Progression>& progs,
                                                   uint64_t M);

// c_{r,M}, exact; depends only on which primes of M divide r.
ExactRational density_constant(uint64_t r, uint64_t M);

// Full pipeline at the canonical modulus M = 12m.
BsReport B_constant(const SignPattern& s);

// Same pipeline refined at a caller-chosen common modulus (12m | M required);
// the result must be identical — exercised by the refinement-invariance tests.
BsReport B_constant_at_modulus(const SignPattern& s, uint64_t M);

// B for every pattern of every length 1..max_period (max_period <= 8),
// keyed by the pattern word. Parallelized across patterns.
std::map<std::string, ExactRational> table_reproduce(uint32_t max_period);

// One fixture row `<pattern>,<num>/<den>` per line (denominator 1 may be
// written without the slash). Throws on unreadable file or malformed row.
std::map<std::string, ExactRational> load_table_fixture(const std::string& path);

}  // namespace lucaslcm
