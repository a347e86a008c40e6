#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace volterra {

enum class LemmaMode { exact, floating };

struct LemmaRow {
  long n = 0;
  long s = 0;
  double max_residual = 0.0;       // direct sum vs closed form
  double max_recursion = 0.0;      // three-term recursion residual (n >= 2)
  double max_term = 1.0;           // conditioning proxy, float mode
  bool exactly_zero = false;       // exact mode only
};

struct LemmaSweepResult {
  std::vector<LemmaRow> rows;
  bool pass = true;
};

// Random node sets (distinct; nonzero; float mode draws |x| in [0.1, 10]
// with random sign, exact mode draws small rationals), swept over
// s in [s_min, s_max] with `trials` node sets per s. Exact mode requires
// residuals identically zero; float mode requires
// residual <= 1e-9 * (1 + max|term|).
LemmaSweepResult run_lemma_sweep(long n, long s_min, long s_max, long trials,
                                 std::uint64_t seed, LemmaMode mode);

}  // namespace volterra
