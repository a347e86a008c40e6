#pragma once

#include <span>
#include <vector>

namespace volterra {

// Off-diagonal coefficients of the zero-diagonal Hill recurrence
//   a_{n-1} y_{n-1} + a_n y_{n+1} = lambda y_n .
// Stored as a_1..a_N; at(n) resolves any integer site cyclically, so
// at(0) == at(N).
class HillCoefficients {
 public:
  explicit HillCoefficients(std::vector<double> a);

  int period() const { return static_cast<int>(a_.size()); }
  double at(long n) const;
  const std::vector<double>& values() const { return a_; }

  double product() const;  // a_1 * ... * a_N
  double scale() const;    // max(1, max_n a_n)^2, the natural lambda magnitude

 private:
  std::vector<double> a_;
};

// Fundamental solutions theta (1, 0, ...) and phi (0, 1, ...) of the shifted
// recurrence a_{n-1+k} y_{n-1} + a_{n+k} y_{n+1} = lambda y_n, n = 1..N,
// together with their lambda-derivatives, indices 0..N+1.
struct FundamentalPair {
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> theta_prime;
  std::vector<double> phi_prime;
  double lambda = 0.0;
  int shift = 0;

  // theta_N phi_{N+1} - theta_{N+1} phi_N; identically 1 for cyclic
  // coefficients.
  double wronskian() const;
};

FundamentalPair fundamental_solutions(const HillCoefficients& c, double lambda, int shift = 0);

// Delta(lambda) = theta_N(lambda) + phi_{N+1}(lambda) at shift 0.
double discriminant(const HillCoefficients& c, double lambda);

struct GapInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool closed = false;
};

// The 2N roots of Delta^2 - 4 (ascending, multiplicities kept) and the N-1
// gaps [lambda_{2j}, lambda_{2j+1}] between them. `scale` is copied from the
// coefficients so downstream consumers can tolerance against it.
struct HillSpectrum {
  std::vector<double> lambda;
  std::vector<GapInterval> gaps;
  double scale = 1.0;

  int period() const { return static_cast<int>(lambda.size()) / 2; }
};

// Merged spectra of the periodic (+a_N corner) and antiperiodic (-a_N
// corner) N x N zero-diagonal matrices; exactly the roots of Delta = +-2.
HillSpectrum periodic_spectrum(const HillCoefficients& c);

// Dirichlet eigenvalues mu_{1,k} < ... < mu_{N-1,k} for shift k, plus their
// signs once sigma_signs has run.
struct AuxSpectrum {
  int shift = 0;
  std::vector<double> mu;
  std::vector<int> sigma;  // +-1 per gap, +1 at gap edges by convention
};

// Eigenvalues of the (N-1) x (N-1) zero-diagonal tridiagonal matrix with
// off-diagonal entries a_{2+k}, ..., a_{N-1+k}; equivalently the roots of
// theta_{N+1} at shift k.
AuxSpectrum dirichlet_spectrum(const HillCoefficients& c, int shift);

// sigma_{j,k} = sign(theta_N(mu) - 1/theta_N(mu)) with shifted fundamental
// solutions; +1 when mu sits at a gap edge (the flow velocity vanishes
// there, so the sign is immaterial).
void sigma_signs(const HillCoefficients& c, AuxSpectrum& aux);

// Radicand threshold below which a point counts as a gap edge.
double sigma_edge_tolerance(double scale);

// Residual of Delta^2 - 4 == (prod a)^-2 prod_i (lambda - lambda_i),
// scaled by the magnitude of both sides.
double spectral_polynomial_residual(const HillCoefficients& c, const HillSpectrum& s,
                                    double lambda);

// Max over j of the scaled residual between theta'_{N+1}(mu_j) from the
// derivative recurrence and -a_k (prod a)^-1 prod_{i != j} (mu_j - mu_i).
double theta_prime_product_residual(const HillCoefficients& c, const AuxSpectrum& aux);

// Max over j of the scaled residual of
// sum_{n=1}^N theta_n(mu_j)^2 == a_{N+k} theta_N(mu_j) theta'_{N+1}(mu_j).
double norm_identity_residual(const HillCoefficients& c, const AuxSpectrum& aux);

}  // namespace volterra
