#pragma once

#include <stdexcept>

namespace volterra {

// Malformed external input: bad JSON, unusable CSV, bad flag values.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A domain invariant does not hold (u_n <= 0, period < 2, zero node, ...).
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Time integration failed: blow-up, or the state left its admissible region.
struct integration_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coinciding spectral points where a formula divides by their difference.
struct degeneracy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spectral data incompatible with a positive chain (wrong sign, drifted mu).
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace volterra
