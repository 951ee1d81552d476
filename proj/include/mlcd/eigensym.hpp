#pragma once

#include "mlcd/graph.hpp"

namespace mlcd {

// Full spectral decomposition of a symmetric matrix, eigenvalues sorted
// descending; eigenvectors are the matching orthonormal columns.
struct SymmetricEigen {
  Vector eigenvalues;
  Matrix eigenvectors;
};

// Cyclic Jacobi rotations. Input must be symmetric within 1e-9 (absolute);
// iteration stops when the off-diagonal Frobenius norm falls below
// 1e-12 * ||A||_F, capped at 100 sweeps (NoConvergence past the cap).
SymmetricEigen sym_eigen(const Matrix& a);

// Best rank-r approximation: top-r spectral components by |eigenvalue|, so
// the Frobenius error equals the tail singular-value norm.
Matrix truncated_approx(const Matrix& a, int r);

}  // namespace mlcd
