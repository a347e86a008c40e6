#pragma once

#include <span>
#include <vector>

namespace volterra {

// Dense symmetric matrix, row-major, zero-initialized. Sized for the small
// periodic/antiperiodic eigenproblems (N <= 32); no sparsity games.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<double> d_;
};

// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
// rotations. Multiple eigenvalues come out repeated to solver precision.
std::vector<double> jacobi_eigenvalues(SymMatrix a);

// All eigenvalues of the symmetric tridiagonal matrix with diagonal `diag`
// and off-diagonal `off`, ascending, by bisection on Sturm sign counts.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> off);

}  // namespace volterra
