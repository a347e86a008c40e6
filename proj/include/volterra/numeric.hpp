#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace volterra {

// Canonical representative of n modulo m, in [0, m).
inline long mod_index(long n, long m) {
  long r = n % m;
  return r < 0 ? r + m : r;
}

// |x - y| scaled by the magnitude of both operands. Used for residuals of
// identities whose two sides can be large; equals the absolute difference
// when both sides are O(1).
inline double rel_residual(double x, double y) {
  return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y)));
}

// splitmix64. Deterministic across platforms, unlike the standard library
// distributions; every seeded run of the CLI must be bit-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  // Uniform integer in [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Shortest decimal string that parses back to exactly v, capped at 17
// significant digits.
std::string format_double(double v);

// One classical Runge-Kutta step of size h for the autonomous system y' = f(y).
template <class F>
std::vector<double> rk4_step(const F& f, const std::vector<double>& y, double h) {
  const std::size_t m = y.size();
  std::vector<double> k1 = f(y);
  std::vector<double> tmp(m);
  for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  std::vector<double> k2 = f(tmp);
  for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  std::vector<double> k3 = f(tmp);
  for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + h * k3[i];
  std::vector<double> k4 = f(tmp);
  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i)
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

// Uniform time grid from t0 to t_end with step magnitude dt; the final step
// is shortened so that time_at(n_steps) == t_end exactly. Every integrator
// uses this, so direct and spectral sample times coincide bit for bit.
// Backward integration (t_end < t0) takes steps of -dt.
struct StepSchedule {
  double t0 = 0.0;
  double t_end = 0.0;
  double dt = 0.0;  // signed step
  long n_steps = 0;

  double time_at(long i) const { return i == n_steps ? t_end : t0 + static_cast<double>(i) * dt; }
  double step_size(long i) const { return time_at(i + 1) - time_at(i); }
};

StepSchedule make_schedule(double t0, double t_end, double dt);

}  // namespace volterra
