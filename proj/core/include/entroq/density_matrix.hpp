#pragma once

#include <string>
#include <vector>

#include "entroq/complex_matrix.hpp"

namespace entroq {

/// Defects of a candidate density matrix against the standard axioms.
struct ValidationReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool valid = false;
};

/// Compute the three defects (hermiticity, unit trace, positivity) and the
/// combined valid flag at the given tolerance. Never throws on bad input;
/// invalid matrices simply report valid = false. The minimum eigenvalue is
/// taken from the Hermitian part (M + M^dag)/2 so the report stays
/// well-defined for slightly (or grossly) non-Hermitian input.
ValidationReport validate(const ComplexMatrix& m, double tol);

/// Density matrix tagged with its subsystem dimension list.
///
/// dims lists the tensor factors (product equals the matrix dimension);
/// unipartite systems carry a single-element list. Construction enforces
/// hermiticity and unit trace at 1e-10; positivity is enforced lazily by
/// the entropy routines, which reject eigenvalues below -1e-10.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::vector<int> dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return matrix_.dim(); }
  bool bipartite() const { return dims_.size() == 2; }

  /// Same matrix, reinterpreted as a d1 x d2 bipartite system.
  DensityMatrix as_bipartite(int d1, int d2) const;
  /// Same matrix with the subsystem structure forgotten.
  DensityMatrix as_unipartite() const;

 private:
  ComplexMatrix matrix_;
  std::vector<int> dims_;
};

// Named fixture states.

DensityMatrix max_mixed(int dim);
DensityMatrix bell_phi_plus();
DensityMatrix pure_basis(int dim, int k);  // k is 1-based
DensityMatrix werner(double p);
DensityMatrix classically_correlated();

/// Parse a textual state label: "max_mixed(4)", "bell_phi_plus",
/// "pure_basis(4,1)", "werner(0.5)", "classically_correlated".
/// Throws UnknownLabel / ParameterOutOfRange.
DensityMatrix named_state(const std::string& label);

}  // namespace entroq
