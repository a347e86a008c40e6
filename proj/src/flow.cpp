#include "volterra/flow.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "volterra/errors.hpp"
#include "volterra/numeric.hpp"

namespace volterra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double decode_mu(const GapInterval& g, const GapAngle& a) {
  if (!a.open) return a.mu_frozen;
  return 0.5 * (g.lo + g.hi) + 0.5 * (g.hi - g.lo) * std::cos(a.psi);
}

int decode_sigma(const GapAngle& a) {
  if (!a.open) return 1;
  const double s = std::sin(a.psi);
  return s > 0.0 ? -1 : 1;
}

// prod_{i != j} (mu_j - mu_i); zero factors are a degeneracy.
double mu_denominator(const std::vector<double>& mu, int gap_j) {
  double d = 1.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (static_cast<int>(i) + 1 == gap_j) continue;
    const double f = mu[gap_j - 1] - mu[i];
    if (f == 0.0)
      throw degeneracy_error("coinciding auxiliary eigenvalues mu_" + std::to_string(gap_j) +
                             " and mu_" + std::to_string(i + 1));
    d *= f;
  }
  return d;
}

}  // namespace

SpectralFlowState encode_flow_state(const HillSpectrum& spectrum,
                                    const std::vector<AuxSpectrum>& aux_by_shift, double t) {
  const int n = spectrum.period();
  if (static_cast<int>(aux_by_shift.size()) != n)
    throw invariant_error("need one auxiliary spectrum per shift");

  SpectralFlowState state;
  state.spectrum = spectrum;
  state.t = t;
  state.shifts.resize(n);
  for (int k = 0; k < n; ++k) {
    const AuxSpectrum& aux = aux_by_shift[k];
    state.shifts[k].resize(n - 1);
    for (int j = 1; j < n; ++j) {
      const GapInterval& g = spectrum.gaps[j - 1];
      GapAngle& ga = state.shifts[k][j - 1];
      if (g.closed) {
        ga.open = false;
        ga.mu_frozen = 0.5 * (g.lo + g.hi);
        continue;
      }
      const double half = 0.5 * (g.hi - g.lo);
      const double mid = 0.5 * (g.lo + g.hi);
      double c = (aux.mu[j - 1] - mid) / half;
      c = std::clamp(c, -1.0, 1.0);
      const double base = std::acos(c);  // in [0, pi], sin >= 0: the sigma = -1 branch
      ga.open = true;
      ga.psi = aux.sigma[j - 1] < 0 ? base : std::fmod(kTwoPi - base, kTwoPi);
    }
  }
  return state;
}

AuxSpectrum decode_aux(const SpectralFlowState& state, int shift) {
  const int n = state.period();
  AuxSpectrum aux;
  aux.shift = shift;
  aux.mu.resize(n - 1);
  aux.sigma.resize(n - 1);
  for (int j = 1; j < n; ++j) {
    const GapAngle& ga = state.shifts[shift][j - 1];
    aux.mu[j - 1] = decode_mu(state.spectrum.gaps[j - 1], ga);
    aux.sigma[j - 1] = decode_sigma(ga);
  }
  return aux;
}

double spectral_radicand(const HillSpectrum& spectrum, double mu) {
  double r = 1.0;
  for (double li : spectrum.lambda) r *= mu - li;
  if (r < 0.0) {
    if (r >= -sigma_edge_tolerance(spectrum.scale)) return 0.0;
    throw integration_error("auxiliary eigenvalue " + format_double(mu) +
                            " left its spectral gap");
  }
  return r;
}

double dubrovin_velocity(double mu, int sigma, int gap_j, const std::vector<double>& all_mu,
                         const HillSpectrum& spectrum) {
  const double r = spectral_radicand(spectrum, mu);
  const double d = mu_denominator(all_mu, gap_j);
  return -4.0 * mu * static_cast<double>(sigma) * std::sqrt(r) / d;
}

double angle_velocity(const SpectralFlowState& state, int shift, int gap_j) {
  const GapAngle& ga = state.shifts[shift][gap_j - 1];
  if (!ga.open) return 0.0;
  const AuxSpectrum aux = decode_aux(state, shift);
  const double mu = aux.mu[gap_j - 1];

  // Radicand with the two gap-edge factors removed; grouped so every factor
  // is nonnegative for mu inside gap j.
  const auto& lam = state.spectrum.lambda;
  double r = 1.0;
  for (int i = 0; i < 2 * gap_j - 1; ++i) r *= mu - lam[i];
  for (int i = 2 * gap_j + 1; i < static_cast<int>(lam.size()); ++i) r *= lam[i] - mu;
  if (r < 0.0) r = 0.0;  // rounding at a coinciding edge

  const double d = mu_denominator(aux.mu, gap_j);
  return -4.0 * mu * std::sqrt(r) / d;
}

namespace {

std::vector<double> gather_angles(const SpectralFlowState& state) {
  std::vector<double> y;
  for (const auto& shift : state.shifts)
    for (const GapAngle& ga : shift)
      if (ga.open) y.push_back(ga.psi);
  return y;
}

void scatter_angles(SpectralFlowState& state, const std::vector<double>& y) {
  std::size_t idx = 0;
  for (auto& shift : state.shifts)
    for (GapAngle& ga : shift)
      if (ga.open) ga.psi = y[idx++];
}

}  // namespace

void integrate_flow(SpectralFlowState& state, double t_target, double dt, long sample_every,
                    const std::function<void(const SpectralFlowState&)>& on_sample) {
  if (sample_every < 1) throw input_error("sample_every must be at least 1");
  const StepSchedule sched = make_schedule(state.t, t_target, dt);
  const int n = state.period();

  auto rhs = [&](const std::vector<double>& y) {
    SpectralFlowState probe = state;
    scatter_angles(probe, y);
    std::vector<double> out;
    out.reserve(y.size());
    for (int k = 0; k < n; ++k)
      for (int j = 1; j < n; ++j)
        if (probe.shifts[k][j - 1].open) out.push_back(angle_velocity(probe, k, j));
    return out;
  };

  if (on_sample) on_sample(state);
  std::vector<double> y = gather_angles(state);
  for (long i = 0; i < sched.n_steps; ++i) {
    y = rk4_step(rhs, y, sched.step_size(i));
    for (double& psi : y) {
      if (!std::isfinite(psi))
        throw integration_error("gap angle became non-finite at t = " +
                                format_double(sched.time_at(i + 1)));
      psi = std::fmod(psi, kTwoPi);
      if (psi < 0.0) psi += kTwoPi;
    }
    scatter_angles(state, y);
    state.t = sched.time_at(i + 1);
    if (on_sample && (i + 1 == sched.n_steps || (i + 1) % sample_every == 0)) on_sample(state);
  }
}

SpectralTrajectory evolve_spectral(const ChainState& initial, double t_end, double dt,
                                   long sample_every, SigmaFlip flip) {
  validate_chain(initial);
  const HillCoefficients coeffs(a_from_u(initial.u));
  const int n = coeffs.period();

  const HillSpectrum spectrum = periodic_spectrum(coeffs);
  std::vector<AuxSpectrum> aux(n);
  for (int k = 0; k < n; ++k) {
    aux[k] = dirichlet_spectrum(coeffs, k);
    sigma_signs(coeffs, aux[k]);
  }
  if (flip.active()) {
    if (flip.shift_k < 0 || flip.shift_k >= n || flip.gap_j >= n)
      throw input_error("flip-sigma index out of range");
    aux[flip.shift_k].sigma[flip.gap_j - 1] *= -1;
  }

  SpectralFlowState state = encode_flow_state(spectrum, aux, initial.t);

  SpectralTrajectory traj;
  traj.spectrum = spectrum;
  traj.step = dt;
  integrate_flow(state, t_end, dt, sample_every, [&](const SpectralFlowState& s) {
    traj.times.push_back(s.t);
    std::vector<AuxSpectrum> snap(n);
    for (int k = 0; k < n; ++k) snap[k] = decode_aux(s, k);
    traj.samples.push_back(std::move(snap));
  });
  return traj;
}

double identity_26_residual(const HillSpectrum& spectrum, const AuxSpectrum& aux) {
  double sum = 0.0;
  for (std::size_t j = 0; j < aux.mu.size(); ++j) {
    const double r = spectral_radicand(spectrum, aux.mu[j]);
    if (r == 0.0) continue;  // edge or closed gap: the term vanishes
    const double d = mu_denominator(aux.mu, static_cast<int>(j) + 1);
    sum += aux.mu[j] * static_cast<double>(aux.sigma[j]) * std::sqrt(r) / d;
  }
  return std::abs(sum);
}

std::vector<double> identity_27_sums(const HillSpectrum& spectrum, const AuxSpectrum& aux) {
  const int n = spectrum.period();
  if (n < 4) throw invariant_error("the weighted-sum identities need period >= 4");

  std::vector<double> sums(n - 1, 0.0);
  for (long s = 1; s <= n - 1; ++s) {
    double total = 0.0;
    for (std::size_t j = 0; j < aux.mu.size(); ++j) {
      const double mu = aux.mu[j];
      const double d = mu_denominator(aux.mu, static_cast<int>(j) + 1);
      const double r = spectral_radicand(spectrum, mu);
      double ratio;  // mu'_j / (sigma_j sqrt(r)); closed form -4 mu / d at edges
      if (r > 0.0) {
        const double vel = dubrovin_velocity(mu, aux.sigma[j], static_cast<int>(j) + 1,
                                             aux.mu, spectrum);
        ratio = vel / (static_cast<double>(aux.sigma[j]) * std::sqrt(r));
      } else {
        ratio = -4.0 * mu / d;
      }
      total += std::pow(mu, static_cast<double>(s - 1)) * ratio;
    }
    sums[s - 1] = total;
  }
  return sums;
}

}  // namespace volterra
