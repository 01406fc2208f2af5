#include "entroq/maps.hpp"

#include <cmath>

#include "entroq/errors.hpp"

namespace entroq {

namespace {

constexpr double kDegenerateBlock = 1e-14;

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (!rho.bipartite()) throw NotBipartite("partial_trace: state is not bipartite");
  const int d1 = rho.dims()[0];
  const int d2 = rho.dims()[1];
  const ComplexMatrix& m = rho.matrix();

  if (keep == Subsystem::first) {
    ComplexMatrix out(d1);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j) {
        Complex s(0.0, 0.0);
        for (int k = 0; k < d2; ++k) s += m(i * d2 + k, j * d2 + k);
        out(i, j) = s;
      }
    return DensityMatrix(std::move(out), {d1});
  }
  ComplexMatrix out(d2);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d2; ++j) {
      Complex s(0.0, 0.0);
      for (int k = 0; k < d1; ++k) s += m(k * d2 + i, k * d2 + j);
      out(i, j) = s;
    }
  return DensityMatrix(std::move(out), {d2});
}

std::pair<DensityMatrix, DensityMatrix> coded_marginals(const DensityMatrix& rho,
                                                        const IndexCoding& coding) {
  if (rho.dim() != 4) throw DimensionMismatch("coded_marginals: state must be 4x4");
  // The coding lists its labels in flat order, so imposing the pair
  // structure is index-preserving; the physical reading changes, the
  // arithmetic does not.
  (void)coding;
  const DensityMatrix pair_view = rho.as_bipartite(2, 2);
  return {partial_trace(pair_view, Subsystem::first),
          partial_trace(pair_view, Subsystem::second)};
}

DensityMatrix permute_basis(const DensityMatrix& rho, const Permutation& p) {
  const int n = rho.dim();
  if (p.size() != n) throw DimensionMismatch("permute_basis: permutation size mismatch");
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      out(j, k) = m(p.images[static_cast<std::size_t>(j)], p.images[static_cast<std::size_t>(k)]);
  return DensityMatrix(std::move(out), rho.dims());
}

ComplexMatrix clebsch_gordan_matrix() {
  constexpr double kInvSqrt2 = 0.7071067811865475244;
  ComplexMatrix c(4);
  c(0, 0) = 1.0;
  c(1, 1) = kInvSqrt2;
  c(1, 2) = kInvSqrt2;
  c(2, 1) = -kInvSqrt2;
  c(2, 2) = kInvSqrt2;
  c(3, 3) = 1.0;
  return c;
}

DensityMatrix change_basis_coupled(const DensityMatrix& rho, BasisDirection direction) {
  if (rho.dim() != 4) throw DimensionMismatch("change_basis_coupled: state must be 4x4");
  const ComplexMatrix c = clebsch_gordan_matrix();
  const ComplexMatrix u = direction == BasisDirection::to_coupled ? c : c.adjoint();
  return DensityMatrix(conjugate(rho.matrix(), u), rho.dims());
}

BlockSplit block_normalized_maps(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionMismatch("block_normalized_maps: state must be 4x4");
  const ComplexMatrix& m = rho.matrix();

  BlockSplit split;
  split.p1 = m(0, 0).real() + m(1, 1).real();
  split.p2 = m(2, 2).real() + m(3, 3).real();

  const auto normalized_block = [&m](int offset, double p) -> std::optional<DensityMatrix> {
    if (p <= kDegenerateBlock) return std::nullopt;
    ComplexMatrix block(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) block(i, j) = m(offset + i, offset + j) / p;
    return DensityMatrix(std::move(block), {2});
  };

  split.sigma1 = normalized_block(0, split.p1);
  split.sigma2 = normalized_block(2, split.p2);
  return split;
}

}  // namespace entroq
