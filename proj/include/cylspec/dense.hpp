#pragma once

#include <vector>

#include "cylspec/config.hpp"
#include "cylspec/graph.hpp"

namespace cylspec {

/// Dense real symmetric matrix, row-major. set() writes both triangles, and
/// construction from raw entries insists on bit-exact symmetry.
class DenseSymmetricMatrix {
 public:
  explicit DenseSymmetricMatrix(int dim);
  DenseSymmetricMatrix(int dim, std::vector<double> entries);

  static DenseSymmetricMatrix adjacency_of(const Graph& g);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, double value);
  const std::vector<double>& entries() const { return entries_; }

  bool operator==(const DenseSymmetricMatrix& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }

 private:
  int dim_;
  std::vector<double> entries_;
};

/// n-fold block doubling a -> [[a, I], [I, a]]. The result equals the
/// adjacency matrix of the iterated cylinder under the canonical vertex
/// order, entry for entry.
DenseSymmetricMatrix explicit_block_iterate(const DenseSymmetricMatrix& a, int n,
                                            int dense_cap = default_limits().dense_cap);

/// All eigenvalues, ascending, repeated values listed with repetition.
/// Every pair is residual-checked: ||A v - lambda v|| <= 1e-8 * ||A||.
std::vector<double> dense_spectrum(const DenseSymmetricMatrix& a,
                                   int dense_cap = default_limits().dense_cap);

}  // namespace cylspec
