#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace volterra {

// Arbitrary-precision rational scalar for the exact-arithmetic mode of the
// interpolation-sum identities.
using rational = boost::multiprecision::cpp_rational;

inline double to_double(double v) { return v; }
inline double to_double(const rational& v) { return v.convert_to<double>(); }

}  // namespace volterra
