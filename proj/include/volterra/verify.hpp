#pragma once

#include <string>
#include <vector>

#include "volterra/flow.hpp"
#include "volterra/lattice.hpp"

namespace volterra {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double worst_t = 0.0;
  std::string worst_index = "-";
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

// Max over samples and j of |lambda_j(t) - lambda_j(0)|, the full 2N-point
// spectrum recomputed from the directly integrated chain at each sample.
double lambda_conservation(const ChainTrajectory& traj);

struct MuCrossValidation {
  double max_mu_deviation = 0.0;
  double mu_worst_t = 0.0;
  std::string mu_worst_index = "-";
  long sigma_mismatches = 0;
  double sigma_worst_t = 0.0;
  std::string sigma_worst_index = "-";
  long sigma_compared = 0;
};

// Dirichlet spectra and signs recomputed from the direct chain at every
// shared sample versus the flow-integrated values. Sign comparison is
// restricted to gap interiors (mu at least 1e-4 * scale from both edges);
// a mismatch there falsifies the edge-reflection sign rule.
MuCrossValidation mu_cross_validation(const ChainTrajectory& direct,
                                      const SpectralTrajectory& spectral);

// Runs the whole pipeline on one chain: direct and spectral evolution,
// trace-formula reconstruction at every sample, and every identity check,
// each reported with its worst location. Inconsistencies during
// reconstruction become failed checks rather than exceptions.
VerifyReport end_to_end(const ChainState& initial, double t_end, double dt,
                        long sample_every = 10, SigmaFlip flip = {});

}  // namespace volterra
