#include "volterra/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

double offdiag_norm2(const SymMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j) s += a(i, j) * a(i, j);
  return s;
}

}  // namespace

std::vector<double> jacobi_eigenvalues(SymMatrix a) {
  const int n = a.size();
  if (n == 1) return {a(0, 0)};

  double fro2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fro2 += a(i, j) * a(i, j);
  const double stop = fro2 * 1e-30 + std::numeric_limits<double>::min();

  for (int sweep = 0; sweep < 64 && offdiag_norm2(a) > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = a(p, i) = aip - s * (aiq + tau * aip);
          a(i, q) = a(q, i) = aiq + s * (aip - tau * aiq);
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

namespace {

// Number of eigenvalues strictly below x, by the Sturm sign-count on the
// LDL^T pivots. pivmin keeps e^2 / q away from overflow when a pivot lands
// on zero.
long sturm_count(std::span<const double> d, std::span<const double> e, double x,
                 double pivmin) {
  long count = 0;
  double q = d[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (std::abs(q) < pivmin) q = q < 0.0 ? -pivmin : pivmin;
    q = d[i] - x - e[i - 1] * e[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> off) {
  const std::size_t m = diag.size();
  if (m == 0) return {};
  if (off.size() + 1 != m) throw invariant_error("tridiagonal: off-diagonal length mismatch");
  if (m == 1) return {diag[0]};

  double emax = 0.0;
  for (double v : off) emax = std::max(emax, std::abs(v));
  const double pivmin = std::sqrt(std::numeric_limits<double>::min()) * std::max(1.0, emax);

  // Gershgorin bounds.
  double lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < m; ++i) {
    const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < m ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double pad = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;

  std::vector<double> eig(m);
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t k = 0; k < m; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (!(b - a > 2.0 * eps * std::max(1.0, std::max(std::abs(a), std::abs(b))))) break;
      if (sturm_count(diag, off, mid, pivmin) <= static_cast<long>(k))
        a = mid;
      else
        b = mid;
    }
    eig[k] = 0.5 * (a + b);
  }
  return eig;
}

}  // namespace volterra
