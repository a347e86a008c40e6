#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_support.hpp"
#include "volterra/errors.hpp"
#include "volterra/numeric.hpp"
#include "volterra/symm_poly.hpp"

using namespace volterra;
using symm::NodeSet;

TEST_CASE("complete homogeneous basics") {
  const std::vector<double> u{1.0, 2.0, 3.0};
  CHECK(symm::complete_homogeneous(0L, u) == 1.0);
  CHECK(symm::complete_homogeneous(1L, u) == 6.0);
  // 1 + 4 + 9 + 2 + 3 + 6, frozen from the enumeration oracle below.
  CHECK(symm::complete_homogeneous(2L, u) == 25.0);
  CHECK(testsupport::brute_force_homogeneous(2L, u) == 25.0);
}

TEST_CASE("recurrence matches monomial enumeration") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const long nvars = rng.uniform_int(1, 4);
    const long l = rng.uniform_int(0, 5);
    std::vector<double> u;
    for (long i = 0; i < nvars; ++i) u.push_back(rng.uniform(-2.0, 2.0));
    const double fast = symm::complete_homogeneous(l, u);
    const double slow = testsupport::brute_force_homogeneous(l, u);
    CHECK(std::abs(fast - slow) <= 1e-12 * (1.0 + std::abs(slow)));
  }
}

TEST_CASE("two-variable ratio identity") {
  // g_{s-1}(x0, x1) == (x0^s - x1^s) / (x0 - x1) for s >= 1.
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const double x0 = rng.uniform(0.2, 3.0);
    const double x1 = rng.uniform(-3.0, -0.2);
    for (long s = 1; s <= 6; ++s) {
      const std::vector<double> u{x0, x1};
      const double lhs = symm::complete_homogeneous(s - 1, u);
      const double rhs = (std::pow(x0, s) - std::pow(x1, s)) / (x0 - x1);
      CHECK(std::abs(lhs - rhs) <= 1e-11 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("power sum pinned values") {
  const NodeSet<double> x123({1.0, 2.0, 3.0});
  CHECK(symm::lagrange_power_sum(0L, x123) == doctest::Approx(0.0).epsilon(1e-14));
  // (-1)^2 / (1*2*3)
  CHECK(symm::lagrange_power_sum(-1L, x123) == doctest::Approx(1.0 / 6.0));
  // 1/2 - 16 + 81/2; equals g_2(1,2,3) through the s = n + k branch.
  CHECK(symm::lagrange_power_sum(4L, x123) == doctest::Approx(25.0));
}

TEST_CASE("closed form pinned values") {
  const NodeSet<double> x123({1.0, 2.0, 3.0});
  CHECK(symm::lagrange_closed_form(2L, x123) == 1.0);  // s = n
  CHECK(symm::lagrange_closed_form(1L, x123) == 0.0);  // 0 <= s < n

  const NodeSet<double> x24({2.0, 4.0});
  // Brute force: 1/4/(2-4) + 1/16/(4-2) = -3/32.
  CHECK(symm::lagrange_power_sum(-2L, x24) == doctest::Approx(-3.0 / 32.0));
  CHECK(symm::lagrange_closed_form(-2L, x24) == doctest::Approx(-3.0 / 32.0));
}

TEST_CASE("recursion residual pinned values") {
  CHECK(symm::recursion_residual(0L, NodeSet<double>({1.0, 2.0, 3.0})) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(symm::recursion_residual(3L, NodeSet<double>({1.0, 2.0, 5.0})) <= 1e-12);
  CHECK(symm::recursion_residual(-1L, NodeSet<double>({1.0, 2.0, 3.0})) <= 1e-12);
}

TEST_CASE("float sweep with conditioning guard") {
  Rng rng(23);
  for (long n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> xs;
      while (static_cast<long>(xs.size()) < n + 1) {
        const double mag = rng.uniform(0.1, 10.0);
        const double v = rng.next_u64() & 1 ? mag : -mag;
        if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
      }
      const NodeSet<double> nodes(xs);
      for (long s = -6; s <= n + 6; ++s) {
        const double guard = 1e-9 * (1.0 + symm::lagrange_max_term(s, nodes));
        CHECK(std::abs(symm::lagrange_power_sum(s, nodes) -
                       symm::lagrange_closed_form(s, nodes)) <= guard);
        if (n >= 2) CHECK(symm::recursion_residual(s, nodes) <= guard);
      }
    }
  }
}

TEST_CASE("exact rational arithmetic is exactly zero") {
  Rng rng(31);
  for (long n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<rational> xs;
      while (static_cast<long>(xs.size()) < n + 1) {
        const long num = rng.uniform_int(-20, 20);
        if (num == 0) continue;
        const rational v(num, rng.uniform_int(1, 5));
        if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
      }
      const NodeSet<rational> nodes(xs);
      for (long s = -5; s <= n + 5; ++s) {
        CHECK(symm::lagrange_power_sum(s, nodes) == symm::lagrange_closed_form(s, nodes));
        if (n >= 2) CHECK(symm::recursion_residual(s, nodes) == rational(0));
      }
    }
  }
}

TEST_CASE("node set validation") {
  CHECK_THROWS_AS(NodeSet<double>({1.0}), invariant_error);
  CHECK_THROWS_AS(NodeSet<double>({1.0, 1.0}), invariant_error);
  const NodeSet<double> with_zero({0.0, 1.0, 2.0});
  CHECK_THROWS_AS(symm::lagrange_power_sum(-1L, with_zero), invariant_error);
  CHECK_THROWS_AS(symm::lagrange_closed_form(-2L, with_zero), invariant_error);
  // Nonzero-ness is not required for s >= 0.
  CHECK(symm::lagrange_closed_form(1L, with_zero) == 0.0);
}
