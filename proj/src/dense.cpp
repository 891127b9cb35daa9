#include "cylspec/dense.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "cylspec/errors.hpp"

namespace cylspec {

DenseSymmetricMatrix::DenseSymmetricMatrix(int dim) : dim_(dim) {
  if (dim < 0) fail(ErrorKind::InvalidParameter, "negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

DenseSymmetricMatrix::DenseSymmetricMatrix(int dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 0) fail(ErrorKind::InvalidParameter, "negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
    fail(ErrorKind::InvalidParameter, "entry count does not match dimension");
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        fail(ErrorKind::Validation, "matrix is not symmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

void DenseSymmetricMatrix::set(int i, int j, double value) {
  entries_[static_cast<std::size_t>(i) * dim_ + j] = value;
  entries_[static_cast<std::size_t>(j) * dim_ + i] = value;
}

DenseSymmetricMatrix DenseSymmetricMatrix::adjacency_of(const Graph& g) {
  DenseSymmetricMatrix a(g.vertex_count());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

DenseSymmetricMatrix explicit_block_iterate(const DenseSymmetricMatrix& a, int n,
                                            int dense_cap) {
  if (n < 0) fail(ErrorKind::InvalidParameter, "iteration count must be nonnegative");
  long final_dim = a.dim();
  for (int i = 0; i < n; ++i) {
    final_dim *= 2;
    if (final_dim > dense_cap) {
      fail(ErrorKind::SizeGuard, "block iterate dimension " + std::to_string(a.dim()) +
                                     "*2^" + std::to_string(n) + " exceeds the dense cap of " +
                                     std::to_string(dense_cap));
    }
  }
  DenseSymmetricMatrix current = a;
  for (int step = 0; step < n; ++step) {
    int d = current.dim();
    DenseSymmetricMatrix next(2 * d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        double value = current(i, j);
        if (value != 0.0) {
          next.set(i, j, value);
          next.set(i + d, j + d, value);
        }
      }
      next.set(i, i + d, 1.0);
    }
    current = std::move(next);
  }
  return current;
}

std::vector<double> dense_spectrum(const DenseSymmetricMatrix& a, int dense_cap) {
  int n = a.dim();
  if (n > dense_cap) {
    fail(ErrorKind::SizeGuard, "matrix dimension " + std::to_string(n) +
                                   " exceeds the dense cap of " + std::to_string(dense_cap));
  }
  if (n == 0) return {};

  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::Solver, "symmetric eigensolver failed to converge at dimension " +
                                std::to_string(n));
  }

  // per-pair residual check against the infinity norm of A
  double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  double bound = kResidualTol * std::max(norm, 1.0);
  Eigen::MatrixXd residual = m * solver.eigenvectors() -
                             solver.eigenvectors() * solver.eigenvalues().asDiagonal();
  for (int i = 0; i < n; ++i) {
    double r = residual.col(i).norm();
    if (!(r <= bound)) {
      fail(ErrorKind::Solver, "eigenpair " + std::to_string(i) + " residual " +
                                  std::to_string(r) + " exceeds bound " + std::to_string(bound));
    }
  }

  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace cylspec
