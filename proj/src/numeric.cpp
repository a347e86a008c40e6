#include "volterra/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "volterra/errors.hpp"

namespace volterra {

std::string format_double(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

StepSchedule make_schedule(double t0, double t_end, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw input_error("step size dt must be positive");
  if (!std::isfinite(t0) || !std::isfinite(t_end)) throw input_error("non-finite time bound");
  StepSchedule s;
  s.t0 = t0;
  s.t_end = t_end;
  const double span = t_end - t0;
  if (span == 0.0) {
    s.dt = dt;
    s.n_steps = 0;
    return s;
  }
  s.dt = span > 0.0 ? dt : -dt;
  // Final partial step lands exactly on t_end; tolerate span being a near
  // multiple of dt without generating a zero-length extra step.
  s.n_steps = static_cast<long>(std::ceil(std::abs(span) / dt - 1e-9));
  if (s.n_steps < 1) s.n_steps = 1;
  return s;
}

}  // namespace volterra
