#pragma once

namespace cylspec {

// Size guards and tolerances. These are defaults, not hard constants:
// every entry point that enforces one takes it as a parameter.
struct Limits {
  // Largest matrix dimension the dense eigensolver accepts.
  int dense_cap = 4096;
  // Largest vertex count for explicit cylinder iteration.
  long explicit_cap = 1L << 16;
  // Largest hypercube dimension for explicit construction.
  int hypercube_dim_cap = 20;
};

inline const Limits& default_limits() {
  static const Limits limits;
  return limits;
}

// Two eigenvalues coalesce when |a-b| <= kMergeTolScale * max(1, k+N).
inline constexpr double kMergeTolScale = 1e-9;

// Base eigenvalues within this distance of an integer lattice are snapped,
// making all downstream merges exact.
inline constexpr double kIntegerSnapTol = 1e-7;

// Per-pair eigensolver residual bound, relative to the matrix norm.
inline constexpr double kResidualTol = 1e-8;

// Tolerance for grouping near-equal dense eigenvalues into multiplicities.
inline constexpr double kDenseMergeTol = 1e-6;

}  // namespace cylspec
