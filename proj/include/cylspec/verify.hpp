#pragma once

#include <string>
#include <vector>

#include "cylspec/config.hpp"
#include "cylspec/graph.hpp"
#include "cylspec/numeric.hpp"

namespace cylspec {

struct MultiplicityMismatch {
  double dense_value;
  long dense_count;
  double symbolic_value;  // NaN when the symbolic side has no partner
  std::string symbolic_count;
};

/// Outcome of one symbolic-vs-brute-force comparison.
struct VerificationReport {
  std::string base_name;
  int iterations = 0;
  long eigenvalue_count = 0;
  double max_residual = 0.0;  // max |dense - symbolic| over the ascending pairing
  std::vector<MultiplicityMismatch> mismatches;
  bool passed = false;
};

/// Builds the explicit N-fold block matrix of g, dense-solves it, and
/// compares the eigenvalue multiset against the shift-iterated base
/// spectrum. The brute-force side never uses the shift law.
VerificationReport verify_shift_theorem(const Graph& g, const std::string& base_name,
                                        int iterations, double tol = 1e-8,
                                        double dense_merge_tol = kDenseMergeTol,
                                        int dense_cap = default_limits().dense_cap);

}  // namespace cylspec
