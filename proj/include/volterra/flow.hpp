#pragma once

#include <functional>
#include <vector>

#include "volterra/hill.hpp"
#include "volterra/lattice.hpp"

namespace volterra {

// Angle coordinate on one gap of one shift. For an open gap,
//   mu = mid + half * cos(psi),  sigma = +1 if sin(psi) < 0 else -1,
// so the square-root edge singularity of the mu equation disappears and the
// sign flips by itself whenever psi crosses 0 or pi. Closed gaps are frozen
// at their (coinciding) edges.
struct GapAngle {
  bool open = true;
  double psi = 0.0;
  double mu_frozen = 0.0;
};

struct SpectralFlowState {
  HillSpectrum spectrum;                      // constant along the flow
  std::vector<std::vector<GapAngle>> shifts;  // [k][j-1], k = 0..N-1
  double t = 0.0;

  int period() const { return spectrum.period(); }
};

// Angle encoding of the auxiliary spectra of one chain state. aux_by_shift
// must hold shifts 0..N-1 in order, sigma filled.
SpectralFlowState encode_flow_state(const HillSpectrum& spectrum,
                                    const std::vector<AuxSpectrum>& aux_by_shift, double t);

// Decoded (mu, sigma) for one shift of the current state.
AuxSpectrum decode_aux(const SpectralFlowState& state, int shift);

// prod_i (mu - lambda_i) over the full 2N-point spectrum, clamped to zero
// within edge tolerance below zero. A substantially negative radicand means
// mu sits inside a band and is an integration failure.
double spectral_radicand(const HillSpectrum& spectrum, double mu);

// mu'_{j} = -4 mu sigma sqrt(prod_i (mu - lambda_i)) / prod_{i != j} (mu - mu_i).
// gap_j is 1-based; all_mu holds the full auxiliary spectrum of the shift.
double dubrovin_velocity(double mu, int sigma, int gap_j, const std::vector<double>& all_mu,
                         const HillSpectrum& spectrum);

// d psi / dt for one open gap. The two gap-edge factors of the radicand are
// extracted analytically ((mu - lo)(hi - mu) = (half sin psi)^2), which
// cancels the square root of the mu equation; what remains is smooth through
// the edges and reproduces dubrovin_velocity under the chain rule.
double angle_velocity(const SpectralFlowState& state, int shift, int gap_j);

// Test hook: flip sigma of one (gap, shift) before encoding at t = 0.
struct SigmaFlip {
  int gap_j = 0;    // 1-based; 0 disables
  int shift_k = 0;

  bool active() const { return gap_j > 0; }
};

struct SpectralTrajectory {
  HillSpectrum spectrum;
  double step = 0.0;
  std::vector<double> times;
  std::vector<std::vector<AuxSpectrum>> samples;  // [sample][shift]
};

// RK4 on all angles from state.t to t_target (backward if t_target < t).
// on_sample, when given, fires at every sample_every-th step plus both ends.
void integrate_flow(SpectralFlowState& state, double t_target, double dt,
                    long sample_every = 1,
                    const std::function<void(const SpectralFlowState&)>& on_sample = {});

// Full spectral evolution of a chain: spectra at t = 0, angle encoding,
// integration of all N(N-1) angle equations, decoded samples on the same
// time grid integrate_direct would produce.
SpectralTrajectory evolve_spectral(const ChainState& initial, double t_end, double dt,
                                   long sample_every = 1, SigmaFlip flip = {});

// |sum_j mu_j sigma_j sqrt(prod_i (mu_j - lambda_i)) / prod_{i!=j} (mu_j - mu_i)|
// at one state (shift 0 data). Vanishes identically along the flow.
double identity_26_residual(const HillSpectrum& spectrum, const AuxSpectrum& aux);

// The N-1 weighted sums sum_j mu_j^{s-1} mu'_j / (sigma_j sqrt(...)),
// s = 1..N-1. Expected (0, ..., 0, -4, 0): zero up to s = N-3, then -4,
// then 0 (the last uses sum mu = 0). Requires N >= 4.
std::vector<double> identity_27_sums(const HillSpectrum& spectrum, const AuxSpectrum& aux);

}  // namespace volterra
