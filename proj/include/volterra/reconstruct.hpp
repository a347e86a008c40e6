#pragma once

#include <vector>

#include "volterra/flow.hpp"
#include "volterra/hill.hpp"

namespace volterra {

struct ReconstructionReport {
  std::vector<double> u;            // u_1..u_N, storage order
  double lambda_moment = 0.0;       // sum of lambda_i^2
  std::vector<double> mu_moment;    // per shift, sum of mu^2
  std::vector<double> flow_term;    // per shift, sum of sigma sqrt(...) / prod(...)
  int clamped_sites = 0;            // tiny negative a^2 clamped to zero
};

// Trace-formula reconstruction, the production route (any period):
//   a_k^2 = 1/8 sum lambda^2 - 1/4 sum_j mu_{j,k}^2
//           - 1/2 sum_j sigma_{j,k} sqrt(prod_i (mu_{j,k} - lambda_i))
//                                   / prod_{i != j} (mu_{j,k} - mu_{i,k}).
// Gap-edge and closed-gap terms contribute only their -mu^2/4 moment. A
// result below -1e-8 * scale^2 signals inconsistent spectral data (wrong
// sigma or drifted mu) and throws inconsistency_error; smaller negatives are
// clamped to zero.
ReconstructionReport reconstruct_general(const HillSpectrum& spectrum,
                                         const std::vector<AuxSpectrum>& aux_by_shift);

// Alternating-moment route, odd periods only; uses no sign information:
//   a_m^2 = 1/8 sum lambda^2 - 1/4 sum_{k=0}^{N-1} (-1)^k sum_j mu_{j,m+k}^2.
// Returns a_m^2 for the (1-based, cyclic) site m.
double reconstruct_odd_period(const HillSpectrum& spectrum,
                              const std::vector<AuxSpectrum>& aux_by_shift, long site_m);

// Residual of the pair identity
//   a_k^2 + a_{k+1}^2 = 1/4 sum lambda^2 - 1/2 sum_j mu_{j,k}^2
// against reconstructed values; max over k, scaled by scale^2.
double pair_sum_residual(const HillSpectrum& spectrum,
                         const std::vector<AuxSpectrum>& aux_by_shift);

// Log-derivative route at one site and time:
//   a_k^2 = 1/8 sum lambda^2 - 1/4 sum mu_{j,k}^2 + 1/8 d/dt ln prod_j mu_{j,k}(t),
// the derivative taken by central differences of sum_j ln|mu_{j,k}| from
// trajectory samples at t - h and t + h. Inapplicable (invariant_error) when
// any mu_{j,k} is within 1e-8 * scale of zero.
double reconstruct_log_derivative(const SpectralTrajectory& traj, long site_k, double t,
                                  double h);

}  // namespace volterra
