#include "volterra/lemma_sweep.hpp"

#include <algorithm>
#include <cmath>

#include "volterra/numeric.hpp"
#include "volterra/symm_poly.hpp"

namespace volterra {

namespace {

std::vector<double> random_float_nodes(Rng& rng, long n) {
  std::vector<double> x;
  while (static_cast<long>(x.size()) < n + 1) {
    const double mag = rng.uniform(0.1, 10.0);
    const double v = rng.next_u64() & 1 ? mag : -mag;
    if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
  }
  return x;
}

std::vector<rational> random_rational_nodes(Rng& rng, long n) {
  std::vector<rational> x;
  while (static_cast<long>(x.size()) < n + 1) {
    long num = rng.uniform_int(-30, 30);
    if (num == 0) continue;
    const long den = rng.uniform_int(1, 6);
    const rational v(num, den);
    if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
  }
  return x;
}

}  // namespace

LemmaSweepResult run_lemma_sweep(long n, long s_min, long s_max, long trials,
                                 std::uint64_t seed, LemmaMode mode) {
  Rng rng(seed);
  LemmaSweepResult result;
  for (long s = s_min; s <= s_max; ++s) {
    LemmaRow row;
    row.n = n;
    row.s = s;
    row.exactly_zero = true;
    for (long trial = 0; trial < trials; ++trial) {
      if (mode == LemmaMode::exact) {
        const symm::NodeSet<rational> nodes(random_rational_nodes(rng, n));
        const rational diff =
            symm::lagrange_power_sum(s, nodes) - symm::lagrange_closed_form(s, nodes);
        if (diff != rational(0)) row.exactly_zero = false;
        row.max_residual = std::max(row.max_residual, std::abs(to_double(diff)));
        if (n >= 2) {
          const rational rec = symm::recursion_residual(s, nodes);
          if (rec != rational(0)) row.exactly_zero = false;
          row.max_recursion = std::max(row.max_recursion, std::abs(to_double(rec)));
        }
      } else {
        const symm::NodeSet<double> nodes(random_float_nodes(rng, n));
        const double direct = symm::lagrange_power_sum(s, nodes);
        const double closed = symm::lagrange_closed_form(s, nodes);
        row.max_term = std::max(row.max_term, symm::lagrange_max_term(s, nodes));
        row.max_residual = std::max(row.max_residual, std::abs(direct - closed));
        if (n >= 2)
          row.max_recursion = std::max(row.max_recursion, symm::recursion_residual(s, nodes));
      }
    }
    const bool ok = mode == LemmaMode::exact
                        ? row.exactly_zero
                        : row.max_residual <= 1e-9 * (1.0 + row.max_term) &&
                              row.max_recursion <= 1e-9 * (1.0 + row.max_term);
    result.pass = result.pass && ok;
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace volterra
