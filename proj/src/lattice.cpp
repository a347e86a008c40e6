#include "volterra/lattice.hpp"

#include <cmath>
#include <string>

#include "volterra/errors.hpp"
#include "volterra/numeric.hpp"

namespace volterra {

void validate_chain(const ChainState& s) {
  if (s.period() < 2) throw invariant_error("chain period n must be at least 2");
  for (int i = 0; i < s.period(); ++i) {
    if (!std::isfinite(s.u[i]))
      throw invariant_error("u_" + std::to_string(i + 1) + " is not finite");
    if (!(s.u[i] > 0.0))
      throw invariant_error("u_" + std::to_string(i + 1) + " must be positive");
  }
  if (!std::isfinite(s.t)) throw invariant_error("chain time t is not finite");
}

std::vector<double> volterra_rhs(const ChainState& s) {
  const long n = s.period();
  std::vector<double> out(n);
  for (long i = 0; i < n; ++i)
    out[i] = s.u[i] * (s.u[mod_index(i + 1, n)] - s.u[mod_index(i - 1, n)]);
  return out;
}

std::vector<double> a_from_u(std::span<const double> u) {
  std::vector<double> a(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] > 0.0))
      throw invariant_error("u_" + std::to_string(i + 1) + " must be positive");
    a[i] = 0.5 * std::sqrt(u[i]);
  }
  return a;
}

std::vector<double> u_from_a(std::span<const double> a) {
  std::vector<double> u(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0))
      throw invariant_error("a_" + std::to_string(i + 1) + " must be positive");
    u[i] = 4.0 * a[i] * a[i];
  }
  return u;
}

std::vector<double> a_rhs(std::span<const double> a) {
  const long n = static_cast<long>(a.size());
  std::vector<double> out(n);
  for (long i = 0; i < n; ++i) {
    const double ap = a[mod_index(i + 1, n)];
    const double am = a[mod_index(i - 1, n)];
    out[i] = 2.0 * a[i] * (ap * ap - am * am);
  }
  return out;
}

namespace {

double chain_sum(const std::vector<double>& u) {
  double s = 0.0;
  for (double v : u) s += v;
  return s;
}

double chain_prod(const std::vector<double>& u) {
  double p = 1.0;
  for (double v : u) p *= v;
  return p;
}

}  // namespace

ChainTrajectory integrate_direct(const ChainState& initial, double t_end, double dt,
                                 long sample_every) {
  validate_chain(initial);
  if (sample_every < 1) throw input_error("sample_every must be at least 1");
  const StepSchedule sched = make_schedule(initial.t, t_end, dt);
  if (sched.dt < 0.0) throw input_error("t_end must not precede the initial time");

  const double sum0 = chain_sum(initial.u);
  const double prod0 = chain_prod(initial.u);

  ChainTrajectory traj;
  traj.step = dt;
  auto record = [&](double t, const std::vector<double>& u) {
    traj.times.push_back(t);
    traj.states.push_back(u);
    InvariantSample inv;
    inv.sum_drift = std::abs(chain_sum(u) - sum0) / (1.0 + std::abs(sum0));
    inv.prod_drift = std::abs(chain_prod(u) - prod0) / (1.0 + std::abs(prod0));
    traj.invariants.push_back(inv);
  };

  std::vector<double> u = initial.u;
  record(sched.t0, u);

  auto rhs = [](const std::vector<double>& y) {
    ChainState s;
    s.u = y;
    return volterra_rhs(s);
  };

  for (long i = 0; i < sched.n_steps; ++i) {
    u = rk4_step(rhs, u, sched.step_size(i));
    const double t = sched.time_at(i + 1);
    for (std::size_t j = 0; j < u.size(); ++j)
      if (!(u[j] > 0.0) || !std::isfinite(u[j]))
        throw integration_error("u_" + std::to_string(j + 1) +
                                " left the positive cone at t = " + format_double(t));
    if (i + 1 == sched.n_steps || (i + 1) % sample_every == 0) record(t, u);
  }
  return traj;
}

}  // namespace volterra
