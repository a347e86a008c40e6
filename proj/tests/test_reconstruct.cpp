#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_support.hpp"
#include "volterra/errors.hpp"
#include "volterra/flow.hpp"
#include "volterra/reconstruct.hpp"

using namespace volterra;

namespace {

struct Setup {
  HillCoefficients coeffs;
  HillSpectrum spectrum;
  std::vector<AuxSpectrum> aux;
};

Setup make_setup(const ChainState& chain) {
  HillCoefficients c = testsupport::coeffs_of(chain);
  HillSpectrum s = periodic_spectrum(c);
  std::vector<AuxSpectrum> aux(c.period());
  for (int k = 0; k < c.period(); ++k) {
    aux[k] = dirichlet_spectrum(c, k);
    sigma_signs(c, aux[k]);
  }
  return {std::move(c), std::move(s), std::move(aux)};
}

}  // namespace

TEST_CASE("constant period-3 chain reconstructs exactly") {
  ChainState chain;
  chain.u = {4.0, 4.0, 4.0};
  const Setup su = make_setup(chain);
  const ReconstructionReport rep = reconstruct_general(su.spectrum, su.aux);
  CHECK(rep.lambda_moment == doctest::Approx(12.0).epsilon(1e-12));
  for (int k = 0; k < 3; ++k) {
    CHECK(rep.mu_moment[k] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.flow_term[k] == 0.0);  // closed gaps contribute no flow term
    CHECK(rep.u[k] == doctest::Approx(4.0).epsilon(1e-10));
  }
}

TEST_CASE("round trip chain -> spectra -> trace formula at t = 0") {
  Rng rng(101);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const ChainState chain = testsupport::random_chain(rng, n);
      const Setup su = make_setup(chain);
      const ReconstructionReport rep = reconstruct_general(su.spectrum, su.aux);
      for (int i = 0; i < n; ++i)
        CHECK(std::abs(rep.u[i] - chain.u[i]) / chain.u[i] <= 1e-7);
    }
  }
}

TEST_CASE("pair-sum identity") {
  Rng rng(103);
  for (int n = 2; n <= 6; ++n) {
    const ChainState chain = testsupport::random_chain(rng, n);
    const Setup su = make_setup(chain);
    CHECK(pair_sum_residual(su.spectrum, su.aux) <= 1e-7);
  }
}

TEST_CASE("odd-period alternating formula agrees with the general one") {
  Rng rng(107);
  for (int n : {3, 5}) {
    const ChainState chain = testsupport::random_chain(rng, n);
    const Setup su = make_setup(chain);
    const ReconstructionReport rep = reconstruct_general(su.spectrum, su.aux);
    for (long m = 1; m <= n; ++m) {
      const double a2_alt = reconstruct_odd_period(su.spectrum, su.aux, m);
      const double a2_gen = 0.25 * rep.u[mod_index(m - 1, n)];
      CHECK(std::abs(a2_alt - a2_gen) / (1.0 + std::abs(a2_gen)) <= 1e-7);
      CHECK(std::abs(4.0 * a2_alt - chain.u[mod_index(m - 1, n)]) /
                chain.u[mod_index(m - 1, n)] <=
            1e-7);
    }
  }
  const Setup even = make_setup(testsupport::random_chain(rng, 4));
  CHECK_THROWS_AS(reconstruct_odd_period(even.spectrum, even.aux, 1), invariant_error);
}

TEST_CASE("odd-period formula remains valid along the flow") {
  Rng rng(109);
  const ChainState chain = testsupport::random_chain(rng, 5);
  const SpectralTrajectory traj = evolve_spectral(chain, 1.0, 1e-3, 1000);
  const ReconstructionReport rep = reconstruct_general(traj.spectrum, traj.samples.back());
  for (long m = 1; m <= 5; ++m) {
    const double a2_alt = reconstruct_odd_period(traj.spectrum, traj.samples.back(), m);
    CHECK(std::abs(4.0 * a2_alt - rep.u[mod_index(m - 1, 5)]) /
              (1.0 + rep.u[mod_index(m - 1, 5)]) <=
          1e-6);
  }
}

TEST_CASE("log-derivative route: second-order agreement with the flow-term route") {
  ChainState chain;
  chain.u = {2.0, 3.0, 4.0};
  const double dt = 5e-4;
  const SpectralTrajectory traj = evolve_spectral(chain, 1.0, dt, 1);
  const double t0 = 0.5;
  const ReconstructionReport rep =
      reconstruct_general(traj.spectrum, traj.samples[static_cast<std::size_t>(
                                            std::llround(t0 / dt))]);
  std::vector<double> errs;
  for (const double h : {1e-2, 5e-3, 2.5e-3}) {
    double worst = 0.0;
    for (long k = 1; k <= 3; ++k) {
      const double a2 = reconstruct_log_derivative(traj, k, t0, h);
      worst = std::max(worst, std::abs(4.0 * a2 - rep.u[mod_index(k - 1, 3)]));
    }
    errs.push_back(worst);
  }
  const double order1 = std::log2(errs[0] / errs[1]);
  const double order2 = std::log2(errs[1] / errs[2]);
  CHECK(order1 > 1.5);
  CHECK(order1 < 2.5);
  CHECK(order2 > 1.5);
  CHECK(order2 < 2.5);
}

TEST_CASE("stationary mu: derivative term vanishes, moments remain") {
  ChainState chain;
  chain.u = {4.0, 4.0, 4.0};
  const SpectralTrajectory traj = evolve_spectral(chain, 1.0, 1e-2, 1);
  const double a2 = reconstruct_log_derivative(traj, 1, 0.5, 1e-1);
  CHECK(4.0 * a2 == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("log-derivative route rejects vanishing mu") {
  Rng rng(113);
  // Even period: the middle Dirichlet eigenvalue is pinned at zero.
  const ChainState chain = testsupport::random_chain(rng, 4);
  const SpectralTrajectory traj = evolve_spectral(chain, 0.1, 1e-3, 1);
  CHECK_THROWS_AS(reconstruct_log_derivative(traj, 1, 0.05, 1e-2), invariant_error);
}

TEST_CASE("analytic log-derivative equals -4x the flow-term sum") {
  Rng rng(127);
  const ChainState chain = testsupport::random_chain(rng, 5);
  const Setup su = make_setup(chain);
  for (int k = 0; k < 5; ++k) {
    double dlog = 0.0;
    for (std::size_t j = 0; j < su.aux[k].mu.size(); ++j) {
      const double vel = dubrovin_velocity(su.aux[k].mu[j], su.aux[k].sigma[j],
                                           static_cast<int>(j) + 1, su.aux[k].mu, su.spectrum);
      dlog += vel / su.aux[k].mu[j];
    }
    double flow_sum = 0.0;
    for (std::size_t j = 0; j < su.aux[k].mu.size(); ++j) {
      const double r = spectral_radicand(su.spectrum, su.aux[k].mu[j]);
      double d = 1.0;
      for (std::size_t i = 0; i < su.aux[k].mu.size(); ++i)
        if (i != j) d *= su.aux[k].mu[j] - su.aux[k].mu[i];
      flow_sum += su.aux[k].sigma[j] * std::sqrt(r) / d;
    }
    CHECK(std::abs(dlog + 4.0 * flow_sum) <= 1e-9 * (1.0 + std::abs(dlog)));
  }
}

TEST_CASE("flipped sigma produces a negative a^2 or a visibly wrong chain") {
  Rng rng(131);
  const ChainState chain = testsupport::random_chain(rng, 4);
  const Setup su = make_setup(chain);
  auto broken = su.aux;
  broken[0].sigma[0] *= -1;
  bool detected = false;
  try {
    const ReconstructionReport rep = reconstruct_general(su.spectrum, broken);
    for (int i = 0; i < 4 && !detected; ++i)
      detected = std::abs(rep.u[i] - chain.u[i]) / chain.u[i] > 1e-4;
  } catch (const inconsistency_error&) {
    detected = true;
  }
  CHECK(detected);
}
