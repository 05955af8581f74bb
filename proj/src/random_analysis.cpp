#include "lucaslcm/random_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lucaslcm/periodic.hpp"

namespace lucaslcm {

double dilog(double z, const SeriesConfig& cfg) {
  if (cfg.tolerance <= 0) throw std::invalid_argument("dilog: tolerance > 0 required");
  if (z < 0.0 || z > 1.0) throw std::invalid_argument("dilog: z in [0,1] required");
  if (z == 0.0) return 0.0;
  if (z == 1.0) return GoldenRatioConstants::pi_squared / 6.0;
  double sum = 0.0, power = z;
  for (uint64_t k = 1; k <= cfg.max_terms; ++k) {
    const double term = power / (static_cast<double>(k) * static_cast<double>(k));
    sum += term;
    if (term < cfg.tolerance) break;
    power *= z;
  }
  return sum;
}

double dilog_shifted(double z, double a, const SeriesConfig& cfg) {
  if (cfg.tolerance <= 0) throw std::invalid_argument("dilog_shifted: tolerance > 0 required");
  if (z < 0.0 || z >= 1.0) throw std::invalid_argument("dilog_shifted: z in [0,1) required");
  if (a < 0.0) throw std::invalid_argument("dilog_shifted: a >= 0 required");
  if (z == 0.0) return 0.0;
  double sum = 0.0, power = z;
  for (uint64_t k = 1; k <= cfg.max_terms; ++k) {
    const double ka = static_cast<double>(k) + a;
    const double term = power / (ka * ka);
    sum += term;
    if (term < cfg.tolerance) break;
    power *= z;
  }
  return sum;
}

double t_q_general_branch(double z, double w, uint32_t q, const SeriesConfig& cfg) {
  if (z <= 0.0 || z > 1.0) throw std::invalid_argument("t_q_general_branch: z in (0,1] required");
  if (w < 0.0 || w > 1.0) throw std::invalid_argument("t_q_general_branch: w in [0,1] required");
  if (q == 0) throw std::invalid_argument("t_q_general_branch: q >= 1 required");
  const double qq = static_cast<double>(q) * static_cast<double>(q);
  const double zqw = std::pow(z, static_cast<double>(q)) * w;
  // (1-zw) Li_2(z^q w) / (q^2 z w); at w = 0 this has the limit z^{q-1}/q^2.
  double head;
  if (w == 0.0)
    head = std::pow(z, static_cast<double>(q) - 1.0) / qq;
  else
    head = (1.0 - z * w) * dilog(zqw, cfg) / (qq * z * w);
  double tail = 0.0;
  double zj = 1.0;
  for (uint32_t j = 1; j < q; ++j) {
    zj *= z;
    const double jj = static_cast<double>(j) * static_cast<double>(j);
    tail += zj * (1.0 / jj + dilog_shifted(zqw, static_cast<double>(j) / q, cfg) / qq);
  }
  return head + (1.0 - z) / z * tail;
}

double t_q(double z, double w, uint32_t q, const SeriesConfig& cfg) {
  if (z < 0.0 || z > 1.0) throw std::invalid_argument("t_q: z in [0,1] required");
  if (w < 0.0 || w > 1.0) throw std::invalid_argument("t_q: w in [0,1] required");
  if (q == 0) throw std::invalid_argument("t_q: q >= 1 required");
  if (z == 0.0) return 1.0;
  if (w == 1.0) return (1.0 - z) * dilog(z, cfg) / z;
  return t_q_general_branch(z, w, q, cfg);
}

double c_closed_form(const SeriesConfig& cfg) {
  return 243.0 / 128.0 + (27.0 / 8.0) * dilog(0.25, cfg) + (9.0 / 8.0) * dilog(1.0 / 16.0, cfg) +
         (3.0 / 16.0) * dilog_shifted(1.0 / 16.0, 1.0 / 3.0, cfg) +
         (3.0 / 32.0) * dilog_shifted(1.0 / 16.0, 2.0 / 3.0, cfg);
}

double c_from_decomposition(const SeriesConfig& cfg) {
  const double li4 = dilog(0.25, cfg);
  const double li16 = dilog(1.0 / 16.0, cfg);
  const double li16a = dilog_shifted(1.0 / 16.0, 1.0 / 3.0, cfg);
  const double li16b = dilog_shifted(1.0 / 16.0, 2.0 / 3.0, cfg);
  const double part1 = (9.0 / 8.0) * li4;   // n = 1 (mod 4)
  const double part2 = (9.0 / 4.0) * li4;   // n = 3 (mod 4)
  const double part3 = 81.0 / 128.0 + (3.0 / 8.0) * li16 + (1.0 / 16.0) * li16a + (1.0 / 32.0) * li16b;
  const double part4 = 81.0 / 64.0 + (3.0 / 4.0) * li16 + (1.0 / 8.0) * li16a + (1.0 / 16.0) * li16b;
  return part1 + part2 + part3 + part4;
}

// phi(d) * (1 - 2^{-P(d,n)}); ldexp keeps the dyadic factor exact.
static double expectation_term(uint32_t d, uint32_t n, const TotientTable& table) {
  const uint64_t P = p_exponent(d, n);
  const double loss = (P >= 1074) ? 0.0 : std::ldexp(1.0, -static_cast<int>(P));
  return static_cast<double>(table.phi(d)) * (1.0 - loss);
}

double expected_structural_sum(uint32_t n) {
  if (n < 4) throw std::invalid_argument("expected_structural_sum: n >= 4 required");
  const TotientTable table(3 * n);
  const uint32_t dmax = 3 * n;
  constexpr uint32_t kBlock = 4096;
  const uint32_t blocks = (dmax + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (uint32_t b = 0; b < blocks; ++b) {
    const uint32_t lo = b * kBlock + 1;
    const uint32_t hi = std::min(dmax, lo + kBlock - 1);
    double acc = 0.0;
    for (uint32_t d = lo; d <= hi; ++d) acc += expectation_term(d, n, table);
    partial[b] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double expected_structural_sum_serial(uint32_t n) {
  if (n < 4) throw std::invalid_argument("expected_structural_sum_serial: n >= 4 required");
  const TotientTable table(3 * n);
  double total = 0.0;
  for (uint32_t d = 1; d <= 3 * n; ++d) total += expectation_term(d, n, table);
  return total;
}

std::pair<double, double> phisum_check(uint64_t r, uint64_t m, uint32_t q, double z, double w,
                                       uint64_t x) {
  if (m == 0 || r == 0 || r > m) throw std::invalid_argument("phisum_check: need 1 <= r <= m");
  if (q == 0) throw std::invalid_argument("phisum_check: q >= 1 required");
  if (x < 2) throw std::invalid_argument("phisum_check: x >= 2 required");
  const TotientTable table(static_cast<uint32_t>(x));
  double lhs = 0.0;
  for (uint64_t k = (r % m == 0) ? m : r % m; k <= x; k += m) {
    double factor = 1.0;
    if (z > 0.0)
      factor = 1.0 - std::pow(z, static_cast<double>(x / k)) *
                         std::pow(w, static_cast<double>(x / (q * k)));
    lhs += static_cast<double>(table.phi(static_cast<uint32_t>(k))) * factor;
  }
  const double xd = static_cast<double>(x);
  const double main = 3.0 / GoldenRatioConstants::pi_squared *
                      density_constant(r, m).get_d() * t_q(z, w, q);
  return {lhs / (xd * xd), main};
}

uint64_t splitmix64_next(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<int8_t> trial_signs(uint64_t seed, uint64_t trial, uint32_t n) {
  uint64_t state = seed ^ (0x9E3779B97F4A7C15ull * (trial + 1));
  std::vector<int8_t> signs(n);
  for (uint32_t k = 0; k < n; ++k) {
    signs[k] = (splitmix64_next(state) & 1ull) ? +1 : -1;
  }
  return signs;
}

double trial_log_lcm(const std::vector<int8_t>& signs) {
  if (signs.empty()) throw std::invalid_argument("trial_log_lcm: at least one sign required");
  BigInteger acc = 1;
  BigInteger a = 2, b = 1;  // (L_0, L_1)
  for (uint32_t k = 1; k <= signs.size(); ++k) {
    if (k >= 2) {
      a += b;
      mpz_swap(a.get_mpz_t(), b.get_mpz_t());  // b = L_k
    }
    BigInteger term = b + static_cast<int>(signs[k - 1]);
    if (term == 0) continue;  // only L_1 - 1
    acc = big_lcm(acc, term);
  }
  return log_bigint(acc);
}

MonteCarloReport monte_carlo(uint32_t n, uint32_t trials, uint64_t seed) {
  if (n == 0 || n > 1000) throw std::invalid_argument("monte_carlo: 1 <= n <= 1000 (bigint cap)");
  if (trials == 0) throw std::invalid_argument("monte_carlo: trials >= 1 required");
  MonteCarloReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  rep.trial_logs.assign(trials, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (uint32_t t = 0; t < trials; ++t) {
    rep.trial_logs[t] = trial_log_lcm(trial_signs(seed, t, n));
  }
  double sum = 0.0;
  for (double v : rep.trial_logs) sum += v;  // deterministic: trial order
  rep.mean = sum / trials;
  double ss = 0.0;
  for (double v : rep.trial_logs) ss += (v - rep.mean) * (v - rep.mean);
  rep.stddev = (trials > 1) ? std::sqrt(ss / (trials - 1)) : 0.0;
  rep.normalized = rep.mean * GoldenRatioConstants::pi_squared /
                   (static_cast<double>(n) * n * GoldenRatioConstants::log_alpha);
  return rep;
}

}  // namespace lucaslcm
