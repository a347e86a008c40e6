#pragma once

#include <span>
#include <vector>

namespace volterra {

// One period of the chain. u holds u_1..u_N at indices 0..N-1; any integer
// site index n refers to u[(n-1) mod N], so u_0 == u_N by construction.
struct ChainState {
  std::vector<double> u;
  double t = 0.0;

  int period() const { return static_cast<int>(u.size()); }
};

// N >= 2, every u_n finite and > 0. Throws invariant_error naming the field.
void validate_chain(const ChainState& s);

// Right side of u'_n = u_n (u_{n+1} - u_{n-1}), cyclic indices.
std::vector<double> volterra_rhs(const ChainState& s);

// a_n = sqrt(u_n) / 2 and its inverse u_n = 4 a_n^2.
std::vector<double> a_from_u(std::span<const double> u);
std::vector<double> u_from_a(std::span<const double> a);

// Right side of a'_n = 2 a_n (a_{n+1}^2 - a_{n-1}^2), cyclic indices.
std::vector<double> a_rhs(std::span<const double> a);

struct InvariantSample {
  double sum_drift = 0.0;   // |sum u(t) - sum u(0)| / (1 + |sum u(0)|)
  double prod_drift = 0.0;  // same for the product
};

struct ChainTrajectory {
  double step = 0.0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;  // one u vector per sample
  std::vector<InvariantSample> invariants;
};

// Fixed-step RK4 of the direct equations, final step shortened to land on
// t_end exactly. Records every sample_every-th step plus the endpoint.
// Throws integration_error (with the offending time) if any u_n drops to
// zero or below: the flow preserves positivity, so that means the step is
// too large or the state blew up.
ChainTrajectory integrate_direct(const ChainState& initial, double t_end, double dt,
                                 long sample_every = 1);

}  // namespace volterra
