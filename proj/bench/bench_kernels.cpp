// Timing: OpenMP kernels vs their serial references. The references are kept
// deliberately simple (materialize-the-set, one-trial-at-a-time), so part of
// any gap is algorithmic; with one CPU the thread-scaling share is ~1x.
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "lucaslcm/arith.hpp"
#include "lucaslcm/index_sets.hpp"
#include "lucaslcm/random_analysis.hpp"

using namespace lucaslcm;

namespace {

double best_of(int reps, const std::function<void()>& work) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    work();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, uint32_t n, double serial, double parallel) {
  std::printf("%-24s n=%-8u serial %8.4fs  parallel %8.4fs  speedup %.2fx\n", name, n,
              serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  std::printf("omp_get_max_threads() = %d\n\n", omp_get_max_threads());
  double sink = 0.0;
  uint64_t isink = 0;

  {
    const uint32_t n = 200000;
    const SignPattern s("-");
    const TotientTable table(3 * n);
    const double ser = best_of(3, [&] { isink += union_phi_sum_serial(n, s, table); });
    const double par = best_of(3, [&] { isink += union_phi_sum(n, s, table); });
    row("union_phi_sum", n, ser, par);
  }
  {
    const uint32_t n = 200000;
    const double ser = best_of(3, [&] { sink += expected_structural_sum_serial(n); });
    const double par = best_of(3, [&] { sink += expected_structural_sum(n); });
    row("expected_structural_sum", n, ser, par);
  }
  {
    const uint32_t n = 500, trials = 40;
    // serial reference: per-trial pipeline run one trial at a time
    const double ser = best_of(3, [&] {
      for (uint32_t t = 0; t < trials; ++t)
        sink += trial_log_lcm(trial_signs(99, t, n));
    });
    const double par = best_of(3, [&] { sink += monte_carlo(n, trials, 99).mean; });
    row("monte_carlo", n, ser, par);
  }
  std::printf("\n(checksums, to keep the work alive: %.6g / %llu)\n", sink,
              static_cast<unsigned long long>(isink));
  return 0;
}
