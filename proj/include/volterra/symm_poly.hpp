#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "volterra/errors.hpp"
#include "volterra/rational.hpp"

// Complete homogeneous symmetric polynomials g_l and the interpolation-style
// power sums f(s, n) over a set of distinct nodes, together with their
// closed forms. Everything here is a pure function of its arguments and is
// templated over the scalar so the same code runs in doubles and in exact
// rationals.
namespace volterra::symm {

// Interpolation nodes x_0..x_n, pairwise distinct, n >= 1. Nonzero-ness is
// only required when a negative power is evaluated and is checked there.
template <class T>
class NodeSet {
 public:
  explicit NodeSet(std::vector<T> xs) : x_(std::move(xs)) {
    if (x_.size() < 2) throw invariant_error("node set needs at least two nodes");
    for (std::size_t j = 0; j < x_.size(); ++j)
      for (std::size_t m = j + 1; m < x_.size(); ++m)
        if (x_[j] == x_[m]) throw invariant_error("node set has coinciding nodes");
  }

  long degree() const { return static_cast<long>(x_.size()) - 1; }
  std::span<const T> values() const { return x_; }

 private:
  std::vector<T> x_;
};

// x^s for integer s; negative s inverts (x must be nonzero).
template <class T>
T int_power(const T& x, long s) {
  if (s < 0) {
    if (x == T(0)) throw invariant_error("negative power of a zero node");
    return T(1) / int_power(x, -s);
  }
  T acc(1);
  T base = x;
  for (long e = s; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

// Sum of all degree-l monomials in the variables u. Pascal-style recurrence,
// O(|u| * l): extending the variable list by x maps g_l -> g_l + x * g_{l-1}.
template <class T>
T complete_homogeneous(long l, std::span<const T> u) {
  if (l < 0) throw invariant_error("complete_homogeneous: negative degree");
  std::vector<T> g(static_cast<std::size_t>(l) + 1, T(0));
  g[0] = T(1);
  for (const T& x : u) {
    for (long m = 1; m <= l; ++m) g[m] = g[m] + x * g[m - 1];
  }
  return g[static_cast<std::size_t>(l)];
}

template <class T>
T complete_homogeneous(long l, const std::vector<T>& u) {
  return complete_homogeneous(l, std::span<const T>(u));
}

namespace detail {

template <class T>
void require_nonzero_for_negative(long s, std::span<const T> x) {
  if (s <= -1)
    for (const T& v : x)
      if (v == T(0)) throw invariant_error("zero node with negative power s");
}

}  // namespace detail

// f(s, n): the literal sum of x_j^s / prod_{l != j}(x_j - x_l). No closed
// form anywhere; this is the brute-force side of every identity test.
template <class T>
T lagrange_power_sum(long s, const NodeSet<T>& nodes) {
  const auto x = nodes.values();
  detail::require_nonzero_for_negative(s, x);
  T total(0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    T denom(1);
    for (std::size_t l = 0; l < x.size(); ++l)
      if (l != j) denom = denom * (x[j] - x[l]);
    total = total + int_power(x[j], s) / denom;
  }
  return total;
}

// Largest summand magnitude in the literal sum; conditioning proxy for the
// float-mode identity tests (the sum is ill-conditioned for clustered nodes).
template <class T>
double lagrange_max_term(long s, const NodeSet<T>& nodes) {
  const auto x = nodes.values();
  detail::require_nonzero_for_negative(s, x);
  double worst = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    T denom(1);
    for (std::size_t l = 0; l < x.size(); ++l)
      if (l != j) denom = denom * (x[j] - x[l]);
    worst = std::max(worst, std::abs(to_double(int_power(x[j], s) / denom)));
  }
  return worst;
}

// Closed form of f(s, n), by branch on s:
//   s <= -1   ->  (-1)^n / prod(x) * g_{|s|-1}(1/x_0, ..., 1/x_n)
//   0 <= s < n->  0
//   s >= n    ->  g_{s-n}(x_0, ..., x_n)
template <class T>
T lagrange_closed_form(long s, const NodeSet<T>& nodes) {
  const auto x = nodes.values();
  const long n = nodes.degree();
  if (s <= -1) {
    detail::require_nonzero_for_negative(s, x);
    T prod(1);
    std::vector<T> inv;
    inv.reserve(x.size());
    for (const T& v : x) {
      prod = prod * v;
      inv.push_back(T(1) / v);
    }
    const T sign = (n % 2 == 0) ? T(1) : T(-1);
    return sign / prod * complete_homogeneous(-s - 1, std::span<const T>(inv));
  }
  if (s < n) return T(0);
  return complete_homogeneous(s - n, x);
}

// |f(s, n) - f(s-1, n-1) - f(s-1, n) x_n|, all three sums evaluated
// literally. Needs at least three nodes so the (n-1)-node subproblem is a
// valid node set.
template <class T>
T recursion_residual(long s, const NodeSet<T>& nodes) {
  if (nodes.degree() < 2) throw invariant_error("recursion check needs n >= 2");
  const auto x = nodes.values();
  const NodeSet<T> sub(std::vector<T>(x.begin(), x.end() - 1));
  const T lhs = lagrange_power_sum(s, nodes);
  const T rhs = lagrange_power_sum(s - 1, sub) + lagrange_power_sum(s - 1, nodes) * x.back();
  T r = lhs - rhs;
  return r < T(0) ? T(-r) : r;
}

}  // namespace volterra::symm
