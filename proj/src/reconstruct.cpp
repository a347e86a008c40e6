#include "volterra/reconstruct.hpp"

#include <cmath>
#include <string>

#include "volterra/errors.hpp"
#include "volterra/numeric.hpp"

namespace volterra {

namespace {

double lambda_square_moment(const HillSpectrum& s) {
  double m = 0.0;
  for (double li : s.lambda) m += li * li;
  return m;
}

double mu_square_moment(const AuxSpectrum& aux) {
  double m = 0.0;
  for (double mu : aux.mu) m += mu * mu;
  return m;
}

// sum_j sigma_j sqrt(prod_i (mu_j - lambda_i)) / prod_{i != j} (mu_j - mu_i)
double flow_term_sum(const HillSpectrum& spectrum, const AuxSpectrum& aux) {
  double sum = 0.0;
  for (std::size_t j = 0; j < aux.mu.size(); ++j) {
    const double r = spectral_radicand(spectrum, aux.mu[j]);
    if (r == 0.0) continue;
    double d = 1.0;
    for (std::size_t i = 0; i < aux.mu.size(); ++i)
      if (i != j) d *= aux.mu[j] - aux.mu[i];
    if (d == 0.0) throw degeneracy_error("coinciding auxiliary eigenvalues in reconstruction");
    sum += static_cast<double>(aux.sigma[j]) * std::sqrt(r) / d;
  }
  return sum;
}

}  // namespace

ReconstructionReport reconstruct_general(const HillSpectrum& spectrum,
                                         const std::vector<AuxSpectrum>& aux_by_shift) {
  const int n = spectrum.period();
  if (static_cast<int>(aux_by_shift.size()) != n)
    throw invariant_error("need one auxiliary spectrum per shift");

  ReconstructionReport rep;
  rep.lambda_moment = lambda_square_moment(spectrum);
  rep.mu_moment.resize(n);
  rep.flow_term.resize(n);
  rep.u.assign(n, 0.0);

  const double negative_tol = 1e-8 * spectrum.scale * spectrum.scale;
  for (int k = 0; k < n; ++k) {
    rep.mu_moment[k] = mu_square_moment(aux_by_shift[k]);
    rep.flow_term[k] = flow_term_sum(spectrum, aux_by_shift[k]);
    double a2 = 0.125 * rep.lambda_moment - 0.25 * rep.mu_moment[k] - 0.5 * rep.flow_term[k];
    if (a2 < -negative_tol)
      throw inconsistency_error("negative a^2 = " + format_double(a2) + " at site " +
                                std::to_string(k) + " (sign or mu data inconsistent)");
    if (a2 < 0.0) {
      a2 = 0.0;
      ++rep.clamped_sites;
    }
    // Shift k reconstructs a_k; site k lives at storage index (k-1) mod N.
    rep.u[mod_index(k - 1, n)] = 4.0 * a2;
  }
  return rep;
}

double reconstruct_odd_period(const HillSpectrum& spectrum,
                              const std::vector<AuxSpectrum>& aux_by_shift, long site_m) {
  const int n = spectrum.period();
  if (n % 2 == 0) throw invariant_error("alternating-moment reconstruction needs odd period");
  if (static_cast<int>(aux_by_shift.size()) != n)
    throw invariant_error("need one auxiliary spectrum per shift");

  double alternating = 0.0;
  for (int k = 0; k < n; ++k) {
    const double m2 = mu_square_moment(aux_by_shift[mod_index(site_m + k, n)]);
    alternating += (k % 2 == 0 ? 1.0 : -1.0) * m2;
  }
  return 0.125 * lambda_square_moment(spectrum) - 0.25 * alternating;
}

double pair_sum_residual(const HillSpectrum& spectrum,
                         const std::vector<AuxSpectrum>& aux_by_shift) {
  const int n = spectrum.period();
  const ReconstructionReport rep = reconstruct_general(spectrum, aux_by_shift);
  const double lam2 = lambda_square_moment(spectrum);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const double ak2 = 0.25 * rep.u[mod_index(k - 1, n)];
    const double ak1_2 = 0.25 * rep.u[mod_index(k, n)];
    const double rhs = 0.25 * lam2 - 0.5 * mu_square_moment(aux_by_shift[k]);
    worst = std::max(worst, std::abs(ak2 + ak1_2 - rhs));
  }
  return worst / (spectrum.scale * spectrum.scale);
}

double reconstruct_log_derivative(const SpectralTrajectory& traj, long site_k, double t,
                                  double h) {
  const int n = traj.spectrum.period();
  const int shift = static_cast<int>(mod_index(site_k, n));

  auto sample_index = [&](double when) {
    for (std::size_t i = 0; i < traj.times.size(); ++i)
      if (std::abs(traj.times[i] - when) <= 1e-9 * (1.0 + std::abs(when))) return i;
    throw input_error("no trajectory sample at t = " + format_double(when));
  };
  const std::size_t im = sample_index(t - h);
  const std::size_t i0 = sample_index(t);
  const std::size_t ip = sample_index(t + h);

  auto log_abs_product = [&](std::size_t idx) {
    double sum = 0.0;
    for (double mu : traj.samples[idx][shift].mu) {
      if (std::abs(mu) <= 1e-8 * traj.spectrum.scale)
        throw invariant_error("log-derivative formula needs nonvanishing mu (|mu| = " +
                              format_double(std::abs(mu)) + ")");
      sum += std::log(std::abs(mu));
    }
    return sum;
  };

  const double dlog = (log_abs_product(ip) - log_abs_product(im)) / (2.0 * h);
  return 0.125 * lambda_square_moment(traj.spectrum) -
         0.25 * mu_square_moment(traj.samples[i0][shift]) + 0.125 * dlog;
}

}  // namespace volterra
