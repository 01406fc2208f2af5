#pragma once

#include <optional>
#include <utility>

#include "entroq/codings.hpp"
#include "entroq/density_matrix.hpp"

namespace entroq {

enum class Subsystem { first, second };

/// Partial trace of a bipartite state; throws NotBipartite unless the
/// state carries exactly two subsystem dimensions.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Read the flat indices of a 4x4 state through the coding, impose the
/// two-qubit pair structure on them, and take both partial traces.
/// For the two_qubit coding this is literally partial_trace; the other
/// codings give the same matrices their "no subsystem" reading.
std::pair<DensityMatrix, DensityMatrix> coded_marginals(const DensityMatrix& rho,
                                                        const IndexCoding& coding);

/// Basis relabeling: (rho_p)_{jk} = rho_{p(j) p(k)}. Preserves the
/// eigenvalue multiset. Throws DimensionMismatch.
DensityMatrix permute_basis(const DensityMatrix& rho, const Permutation& p);

/// The 4x4 unitary coupling the product basis to the j=1 (+) j=0 basis:
/// identity corners around a central 2x2 Fourier block
/// (1/sqrt2) [[1, 1], [-1, 1]].
ComplexMatrix clebsch_gordan_matrix();

enum class BasisDirection { to_coupled, to_uncoupled };

/// C rho C^dag (to_coupled) or C^dag rho C (to_uncoupled).
DensityMatrix change_basis_coupled(const DensityMatrix& rho, BasisDirection direction);

/// Result of the nonlinear block-normalization maps: the diagonal 2x2
/// blocks of a 4x4 state, renormalized by their traces. A block whose
/// trace falls at or below 1e-14 is reported absent (its entropy terms
/// are defined as zero downstream).
struct BlockSplit {
  double p1 = 0.0;
  std::optional<DensityMatrix> sigma1;
  double p2 = 0.0;
  std::optional<DensityMatrix> sigma2;
};

BlockSplit block_normalized_maps(const DensityMatrix& rho);

}  // namespace entroq
