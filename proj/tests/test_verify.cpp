#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "volterra/verify.hpp"

using namespace volterra;

TEST_CASE("lambda conservation on a constant chain is exact") {
  ChainState chain;
  chain.u = {4.0, 4.0, 4.0};
  const ChainTrajectory traj = integrate_direct(chain, 1.0, 1e-2, 10);
  CHECK(lambda_conservation(traj) <= 1e-13);
}

TEST_CASE("lambda conservation for a random chain") {
  Rng rng(7);
  const ChainState chain = testsupport::random_chain(rng, 4);
  const ChainTrajectory traj = integrate_direct(chain, 1.0, 1e-3, 100);
  const HillCoefficients c = testsupport::coeffs_of(chain);
  CHECK(lambda_conservation(traj) <= 1e-6 * c.scale());
}

TEST_CASE("lambda drift shrinks like dt^4") {
  Rng rng(11);
  const ChainState chain = testsupport::random_chain(rng, 4);
  const double d1 = lambda_conservation(integrate_direct(chain, 1.0, 8e-3, 1 << 30));
  const double d2 = lambda_conservation(integrate_direct(chain, 1.0, 4e-3, 1 << 30));
  const double ratio = d1 / d2;
  CHECK(ratio > 8.0);
  CHECK(ratio < 32.0);
}

TEST_CASE("mu cross validation on a constant chain") {
  ChainState chain;
  chain.u = {4.0, 4.0, 4.0};
  const ChainTrajectory direct = integrate_direct(chain, 0.5, 1e-2, 10);
  const SpectralTrajectory spectral = evolve_spectral(chain, 0.5, 1e-2, 10);
  const MuCrossValidation mcv = mu_cross_validation(direct, spectral);
  CHECK(mcv.max_mu_deviation <= 1e-12);
  CHECK(mcv.sigma_mismatches == 0);
}

TEST_CASE("mu cross validation on random chains") {
  Rng rng(13);
  for (int n = 3; n <= 5; ++n) {
    const ChainState chain = testsupport::random_chain(rng, n);
    const HillCoefficients c = testsupport::coeffs_of(chain);
    const ChainTrajectory direct = integrate_direct(chain, 1.0, 1e-3, 50);
    const SpectralTrajectory spectral = evolve_spectral(chain, 1.0, 1e-3, 50);
    const MuCrossValidation mcv = mu_cross_validation(direct, spectral);
    CHECK(mcv.max_mu_deviation <= 1e-5 * c.scale());
    CHECK(mcv.sigma_mismatches == 0);
    CHECK(mcv.sigma_compared > 0);
  }
}

TEST_CASE("end to end on the fixed point") {
  ChainState chain;
  chain.u = {4.0, 4.0, 4.0};
  const VerifyReport report = end_to_end(chain, 1.0, 1e-2, 10);
  CHECK(report.all_pass);
  for (const CheckResult& c : report.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("end to end headline chain") {
  ChainState chain;
  chain.u = {2.0, 3.0, 4.0};
  const VerifyReport report = end_to_end(chain, 1.0, 1e-3, 20);
  for (const CheckResult& c : report.checks) {
    INFO(c.name, " residual=", c.max_residual, " tol=", c.tolerance);
    CHECK(c.pass);
  }
}

TEST_CASE("end to end random period five") {
  Rng rng(17);
  const ChainState chain = testsupport::random_chain(rng, 5);
  const VerifyReport report = end_to_end(chain, 1.0, 1e-3, 100);
  for (const CheckResult& c : report.checks) {
    INFO(c.name, " residual=", c.max_residual, " tol=", c.tolerance);
    CHECK(c.pass);
  }
}

TEST_CASE("sigma flip is detected") {
  Rng rng(19);
  const ChainState chain = testsupport::random_chain(rng, 4);
  SigmaFlip flip;
  flip.gap_j = 1;
  flip.shift_k = 0;
  bool detected = false;
  try {
    const VerifyReport report = end_to_end(chain, 1.0, 1e-3, 100, flip);
    detected = !report.all_pass;
  } catch (const inconsistency_error&) {
    detected = true;
  }
  CHECK(detected);
}
