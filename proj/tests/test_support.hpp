#pragma once

#include <vector>

#include "volterra/hill.hpp"
#include "volterra/lattice.hpp"
#include "volterra/numeric.hpp"

namespace testsupport {

// Independent oracle for the complete homogeneous symmetric polynomials:
// literal enumeration of every degree-l monomial. Exponential, fine for the
// small degrees it is used at.
template <class T>
T brute_force_homogeneous(long l, const std::vector<T>& u, std::size_t from = 0) {
  if (l == 0) return T(1);
  if (from == u.size()) return T(0);
  T total(0);
  T power(1);
  for (long e = 0; e <= l; ++e) {
    total = total + power * brute_force_homogeneous(l - e, u, from + 1);
    power = power * u[from];
  }
  return total;
}

inline volterra::ChainState random_chain(volterra::Rng& rng, int n, double lo = 0.5,
                                         double hi = 2.0) {
  volterra::ChainState s;
  s.u.resize(n);
  for (int i = 0; i < n; ++i) s.u[i] = rng.uniform(lo, hi);
  return s;
}

inline volterra::HillCoefficients coeffs_of(const volterra::ChainState& s) {
  return volterra::HillCoefficients(volterra::a_from_u(s.u));
}

}  // namespace testsupport
