#include "volterra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "volterra/errors.hpp"
#include "volterra/numeric.hpp"
#include "volterra/reconstruct.hpp"

namespace volterra {

double lambda_conservation(const ChainTrajectory& traj) {
  const HillSpectrum base = periodic_spectrum(HillCoefficients(a_from_u(traj.states.front())));
  double worst = 0.0;
  for (std::size_t s = 1; s < traj.states.size(); ++s) {
    const HillSpectrum now = periodic_spectrum(HillCoefficients(a_from_u(traj.states[s])));
    for (std::size_t i = 0; i < base.lambda.size(); ++i)
      worst = std::max(worst, std::abs(now.lambda[i] - base.lambda[i]));
  }
  return worst;
}

MuCrossValidation mu_cross_validation(const ChainTrajectory& direct,
                                      const SpectralTrajectory& spectral) {
  if (direct.times.size() != spectral.times.size())
    throw invariant_error("trajectories do not share sample times");
  const int n = static_cast<int>(direct.states.front().size());
  const double scale = spectral.spectrum.scale;
  const double interior_margin = 1e-4 * scale;

  MuCrossValidation out;
  for (std::size_t s = 0; s < direct.times.size(); ++s) {
    if (std::abs(direct.times[s] - spectral.times[s]) > 1e-12 * (1.0 + std::abs(direct.times[s])))
      throw invariant_error("trajectories do not share sample times");
    const HillCoefficients coeffs(a_from_u(direct.states[s]));
    for (int k = 0; k < n; ++k) {
      AuxSpectrum ref = dirichlet_spectrum(coeffs, k);
      sigma_signs(coeffs, ref);
      const AuxSpectrum& flow = spectral.samples[s][k];
      for (int j = 1; j < n; ++j) {
        const double dev = std::abs(ref.mu[j - 1] - flow.mu[j - 1]);
        if (dev > out.max_mu_deviation) {
          out.max_mu_deviation = dev;
          out.mu_worst_t = direct.times[s];
          out.mu_worst_index = "mu_" + std::to_string(j) + "_" + std::to_string(k);
        }
        const GapInterval& g = spectral.spectrum.gaps[j - 1];
        if (g.closed) continue;
        const double edge_dist = std::min(ref.mu[j - 1] - g.lo, g.hi - ref.mu[j - 1]);
        if (edge_dist <= interior_margin) continue;
        ++out.sigma_compared;
        if (ref.sigma[j - 1] != flow.sigma[j - 1]) {
          ++out.sigma_mismatches;
          out.sigma_worst_t = direct.times[s];
          out.sigma_worst_index = "sigma_" + std::to_string(j) + "_" + std::to_string(k);
        }
      }
    }
  }
  return out;
}

namespace {

struct CheckAccumulator {
  CheckResult res;

  explicit CheckAccumulator(std::string name, double tol) {
    res.name = std::move(name);
    res.tolerance = tol;
  }

  void feed(double value, double t, const std::string& where) {
    if (value > res.max_residual) {
      res.max_residual = value;
      res.worst_t = t;
      res.worst_index = where;
    }
  }

  CheckResult finish() {
    res.pass = res.max_residual <= res.tolerance;
    return res;
  }
};

}  // namespace

VerifyReport end_to_end(const ChainState& initial, double t_end, double dt, long sample_every,
                        SigmaFlip flip) {
  validate_chain(initial);
  const int n = initial.period();

  const ChainTrajectory direct = integrate_direct(initial, t_end, dt, sample_every);
  const SpectralTrajectory spectral = evolve_spectral(initial, t_end, dt, sample_every, flip);
  const HillSpectrum& spectrum = spectral.spectrum;
  const double scale = spectrum.scale;

  VerifyReport report;
  auto push = [&](CheckResult r) {
    report.all_pass = report.all_pass && r.pass;
    report.checks.push_back(std::move(r));
  };

  // Conserved spectrum under the direct flow.
  {
    CheckAccumulator acc("lambda_conservation", 1e-6 * scale);
    const HillSpectrum base =
        periodic_spectrum(HillCoefficients(a_from_u(direct.states.front())));
    for (std::size_t s = 1; s < direct.states.size(); ++s) {
      const HillSpectrum now =
          periodic_spectrum(HillCoefficients(a_from_u(direct.states[s])));
      for (std::size_t i = 0; i < base.lambda.size(); ++i)
        acc.feed(std::abs(now.lambda[i] - base.lambda[i]), direct.times[s],
                 "lambda_" + std::to_string(i + 1));
    }
    push(acc.finish());
  }

  // Two-route mu and the sign rule.
  {
    const MuCrossValidation mcv = mu_cross_validation(direct, spectral);
    CheckAccumulator acc("mu_cross_validation", 1e-5 * scale);
    acc.feed(mcv.max_mu_deviation, mcv.mu_worst_t, mcv.mu_worst_index);
    push(acc.finish());

    CheckAccumulator sig("sigma_agreement", 0.0);
    sig.feed(static_cast<double>(mcv.sigma_mismatches), mcv.sigma_worst_t,
             mcv.sigma_worst_index);
    push(sig.finish());
  }

  // Reconstructed u against the direct oracle.
  {
    CheckAccumulator acc("u_deviation", 1e-4);
    bool broke = false;
    for (std::size_t s = 0; s < spectral.times.size() && !broke; ++s) {
      try {
        const ReconstructionReport rep = reconstruct_general(spectrum, spectral.samples[s]);
        for (int i = 0; i < n; ++i)
          acc.feed(std::abs(rep.u[i] - direct.states[s][i]) / direct.states[s][i],
                   spectral.times[s], "u_" + std::to_string(i + 1));
      } catch (const inconsistency_error& e) {
        CheckResult bad;
        bad.name = "u_deviation";
        bad.tolerance = 1e-4;
        bad.max_residual = std::numeric_limits<double>::infinity();
        bad.pass = false;
        bad.worst_t = spectral.times[s];
        bad.worst_index = e.what();
        push(std::move(bad));
        broke = true;
      }
    }
    if (!broke) push(acc.finish());
  }

  // Structural identities re-evaluated along the direct run.
  {
    CheckAccumulator wronski("wronskian", 1e-10);
    CheckAccumulator factor("delta_factorization", 1e-8 * scale);
    CheckAccumulator tprod("theta_prime_product", 1e-8 * scale);
    CheckAccumulator norm("norm_identity", 1e-8 * scale);
    CheckAccumulator contain("gap_containment", 1e-6 * scale);
    Rng rng(1234);
    const double lo = spectrum.lambda.front() - 1.0;
    const double hi = spectrum.lambda.back() + 1.0;
    for (std::size_t s = 0; s < direct.times.size(); ++s) {
      const HillCoefficients coeffs(a_from_u(direct.states[s]));
      for (int trial = 0; trial < 5; ++trial) {
        const double lam = rng.uniform(lo, hi);
        factor.feed(spectral_polynomial_residual(coeffs, spectrum, lam), direct.times[s],
                    "lambda=" + format_double(lam));
        const double in_hull =
            rng.uniform(spectrum.lambda.front(), spectrum.lambda.back());
        const FundamentalPair fp = fundamental_solutions(coeffs, in_hull, trial % n);
        wronski.feed(std::abs(fp.wronskian() - 1.0), direct.times[s],
                     "lambda=" + format_double(in_hull));
      }
      for (int k = 0; k < n; ++k) {
        AuxSpectrum aux = dirichlet_spectrum(coeffs, k);
        sigma_signs(coeffs, aux);
        tprod.feed(theta_prime_product_residual(coeffs, aux), direct.times[s],
                   "shift=" + std::to_string(k));
        norm.feed(norm_identity_residual(coeffs, aux), direct.times[s],
                  "shift=" + std::to_string(k));
        for (int j = 1; j < n; ++j) {
          const GapInterval& g = spectrum.gaps[j - 1];
          const double overshoot =
              std::max(g.lo - aux.mu[j - 1], aux.mu[j - 1] - g.hi);
          contain.feed(std::max(0.0, overshoot), direct.times[s],
                       "mu_" + std::to_string(j) + "_" + std::to_string(k));
        }
      }
    }
    push(wronski.finish());
    push(factor.finish());
    push(tprod.finish());
    push(norm.finish());
    push(contain.finish());
  }

  // Flow-side invariants: zero trace and the two weighted-sum identities.
  {
    CheckAccumulator zero("zero_sum", 1e-7);
    CheckAccumulator id26("identity_26", 1e-7 * scale * scale * scale);
    for (std::size_t s = 0; s < spectral.times.size(); ++s) {
      for (int k = 0; k < n; ++k) {
        double sum = 0.0;
        for (double mu : spectral.samples[s][k].mu) sum += mu;
        zero.feed(std::abs(sum), spectral.times[s], "shift=" + std::to_string(k));
      }
      id26.feed(identity_26_residual(spectrum, spectral.samples[s][0]), spectral.times[s],
                "shift=0");
    }
    push(zero.finish());
    push(id26.finish());

    if (n >= 4) {
      CheckAccumulator id27("identity_27", 1e-7);
      for (std::size_t s = 0; s < spectral.times.size(); ++s) {
        const std::vector<double> sums =
            identity_27_sums(spectrum, spectral.samples[s][0]);
        for (int sl = 1; sl <= n - 1; ++sl) {
          const double expected = sl == n - 2 ? -4.0 : 0.0;
          id27.feed(std::abs(sums[sl - 1] - expected), spectral.times[s],
                    "s=" + std::to_string(sl));
        }
      }
      push(id27.finish());
    }
  }

  return report;
}

}  // namespace volterra
