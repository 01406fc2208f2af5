#pragma once

#include <vector>

#include "entroq/complex_matrix.hpp"

namespace entroq {

/// Eigendecomposition of a Hermitian matrix.
///
/// values are real and sorted ascending (ties keep their first-seen order);
/// the columns of vectors are the matching orthonormal eigenvectors, so
/// vectors * diag(values) * vectors^dag reconstructs the input.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Diagonalize a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// Convergence: off-diagonal Frobenius mass below 1e-14 (relative to the
/// matrix scale for inputs far from unit norm), capped at 100 sweeps.
/// Throws NotHermitian when ||M - M^dag||_max > 1e-10 and NoConvergence
/// when the sweep budget is exhausted.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

}  // namespace entroq
