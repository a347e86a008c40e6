#include "volterra/hill.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "volterra/eigensolve.hpp"
#include "volterra/errors.hpp"
#include "volterra/numeric.hpp"

namespace volterra {

HillCoefficients::HillCoefficients(std::vector<double> a) : a_(std::move(a)) {
  if (a_.size() < 2) throw invariant_error("hill coefficients need period >= 2");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] > 0.0) || !std::isfinite(a_[i]))
      throw invariant_error("a_" + std::to_string(i + 1) + " must be positive and finite");
}

double HillCoefficients::at(long n) const {
  return a_[mod_index(n - 1, static_cast<long>(a_.size()))];
}

double HillCoefficients::product() const {
  double p = 1.0;
  for (double v : a_) p *= v;
  return p;
}

double HillCoefficients::scale() const {
  double m = 1.0;
  for (double v : a_) m = std::max(m, v);
  return m * m;
}

double FundamentalPair::wronskian() const {
  const std::size_t n = theta.size() - 2;
  return theta[n] * phi[n + 1] - theta[n + 1] * phi[n];
}

FundamentalPair fundamental_solutions(const HillCoefficients& c, double lambda, int shift) {
  const int n = c.period();
  FundamentalPair fp;
  fp.lambda = lambda;
  fp.shift = shift;
  fp.theta.assign(n + 2, 0.0);
  fp.phi.assign(n + 2, 0.0);
  fp.theta_prime.assign(n + 2, 0.0);
  fp.phi_prime.assign(n + 2, 0.0);
  fp.theta[0] = 1.0;
  fp.phi[1] = 1.0;

  for (int m = 1; m <= n; ++m) {
    const double am = c.at(m - 1 + shift);
    const double ap = c.at(m + shift);
    fp.theta[m + 1] = (lambda * fp.theta[m] - am * fp.theta[m - 1]) / ap;
    fp.phi[m + 1] = (lambda * fp.phi[m] - am * fp.phi[m - 1]) / ap;
    // Differentiate the recurrence in lambda: the inhomogeneous term is the
    // undifferentiated solution itself.
    fp.theta_prime[m + 1] =
        (lambda * fp.theta_prime[m] + fp.theta[m] - am * fp.theta_prime[m - 1]) / ap;
    fp.phi_prime[m + 1] =
        (lambda * fp.phi_prime[m] + fp.phi[m] - am * fp.phi_prime[m - 1]) / ap;
  }
  return fp;
}

double discriminant(const HillCoefficients& c, double lambda) {
  const FundamentalPair fp = fundamental_solutions(c, lambda, 0);
  const int n = c.period();
  return fp.theta[n] + fp.phi[n + 1];
}

HillSpectrum periodic_spectrum(const HillCoefficients& c) {
  const int n = c.period();

  auto boundary_eigs = [&](double corner_sign) {
    SymMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = c.at(i + 1);
    // For n = 2 the corner lands on the one off-diagonal cell and adds to it.
    m(0, n - 1) += corner_sign * c.at(n);
    m(n - 1, 0) = m(0, n - 1);
    return jacobi_eigenvalues(std::move(m));
  };

  HillSpectrum s;
  s.scale = c.scale();
  s.lambda = boundary_eigs(+1.0);
  const std::vector<double> anti = boundary_eigs(-1.0);
  s.lambda.insert(s.lambda.end(), anti.begin(), anti.end());
  std::sort(s.lambda.begin(), s.lambda.end());

  s.gaps.resize(n - 1);
  for (int j = 1; j < n; ++j) {
    GapInterval& g = s.gaps[j - 1];
    g.lo = s.lambda[2 * j - 1];
    g.hi = s.lambda[2 * j];
    g.closed = g.hi - g.lo <= 1e-10 * (1.0 + std::abs(g.lo));
  }
  return s;
}

AuxSpectrum dirichlet_spectrum(const HillCoefficients& c, int shift) {
  const int n = c.period();
  const std::vector<double> diag(n - 1, 0.0);
  std::vector<double> off(n - 2);
  for (int i = 0; i + 2 < n; ++i) off[i] = c.at(2 + shift + i);

  AuxSpectrum aux;
  aux.shift = shift;
  aux.mu = tridiagonal_eigenvalues(diag, off);
  aux.sigma.assign(aux.mu.size(), 1);
  return aux;
}

double sigma_edge_tolerance(double scale) { return 1e-12 * scale * scale * scale * scale; }

void sigma_signs(const HillCoefficients& c, AuxSpectrum& aux) {
  const int n = c.period();
  const double prod = c.product();
  const double tol = sigma_edge_tolerance(c.scale());
  aux.sigma.assign(aux.mu.size(), 1);
  for (std::size_t j = 0; j < aux.mu.size(); ++j) {
    const FundamentalPair fp = fundamental_solutions(c, aux.mu[j], aux.shift);
    const double th = fp.theta[n];
    if (th == 0.0)
      throw degeneracy_error("theta_N vanished at mu_" + std::to_string(j + 1) +
                             " (Wronskian forbids this at a Dirichlet eigenvalue)");
    const double v = th - 1.0 / th;
    // Compare in radicand units: (prod a)^2 v^2 equals prod_i (mu - lambda_i).
    if (prod * prod * v * v <= tol)
      aux.sigma[j] = 1;
    else
      aux.sigma[j] = v > 0.0 ? 1 : -1;
  }
}

double spectral_polynomial_residual(const HillCoefficients& c, const HillSpectrum& s,
                                    double lambda) {
  const double d = discriminant(c, lambda);
  const double lhs = d * d - 4.0;
  double rhs = 1.0;
  for (double li : s.lambda) rhs *= lambda - li;
  const double prod = c.product();
  rhs /= prod * prod;
  return rel_residual(lhs, rhs);
}

double theta_prime_product_residual(const HillCoefficients& c, const AuxSpectrum& aux) {
  const int n = c.period();
  const double prod = c.product();
  double worst = 0.0;
  for (std::size_t j = 0; j < aux.mu.size(); ++j) {
    const FundamentalPair fp = fundamental_solutions(c, aux.mu[j], aux.shift);
    const double lhs = fp.theta_prime[n + 1];
    double rhs = -c.at(aux.shift) / prod;
    for (std::size_t i = 0; i < aux.mu.size(); ++i)
      if (i != j) rhs *= aux.mu[j] - aux.mu[i];
    worst = std::max(worst, rel_residual(lhs, rhs));
  }
  return worst;
}

double norm_identity_residual(const HillCoefficients& c, const AuxSpectrum& aux) {
  const int n = c.period();
  double worst = 0.0;
  for (std::size_t j = 0; j < aux.mu.size(); ++j) {
    const FundamentalPair fp = fundamental_solutions(c, aux.mu[j], aux.shift);
    double lhs = 0.0;
    for (int m = 1; m <= n; ++m) lhs += fp.theta[m] * fp.theta[m];
    const double rhs = c.at(n + aux.shift) * fp.theta[n] * fp.theta_prime[n + 1];
    worst = std::max(worst, rel_residual(lhs, rhs));
  }
  return worst;
}

}  // namespace volterra
