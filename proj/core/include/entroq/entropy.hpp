#pragma once

#include <string>
#include <utility>
#include <vector>

#include "entroq/codings.hpp"
#include "entroq/density_matrix.hpp"
#include "entroq/maps.hpp"

namespace entroq {

/// Discrete probability distribution: nonnegative components summing to 1.
struct ProbabilityVector {
  std::vector<double> components;

  bool is_valid(double tol = 1e-10) const;

  /// Clip round-off noise into an exact distribution: entries below
  /// -neg_tol throw InvalidDistribution, entries below zero_cut become 0,
  /// and the result is renormalized to unit sum.
  static ProbabilityVector clean(std::vector<double> raw, double neg_tol = 1e-12,
                                 double zero_cut = 1e-12);
};

/// Shannon entropy in nats, with the 0 ln 0 = 0 convention.
/// Throws InvalidDistribution if p is not a distribution at 1e-10.
double shannon(const ProbabilityVector& p);

/// Eigenvalues of a state as a probability vector: values in
/// [-1e-10, 1e-12) are clipped to zero and the vector is renormalized;
/// an eigenvalue below -1e-10 throws InvalidState.
ProbabilityVector eigenvalue_distribution(const DensityMatrix& rho);

/// von Neumann entropy in nats: Shannon entropy of the eigenvalues.
double von_neumann(const DensityMatrix& rho);

/// One checked inequality instance. Every inequality is normalized to
/// "rhs >= lhs" form, slack = rhs - lhs, and holds iff slack >= -tolerance.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, std::string>> meta;
};

/// Build a report in "rhs >= lhs" form.
InequalityReport make_report(std::string name, double lhs, double rhs, double tolerance);

/// Subadditivity of a 4x4 state read through a coding:
/// S(m1) + S(m2) >= S(rho) with (m1, m2) = coded_marginals(rho, coding).
InequalityReport subadditivity_check(const DensityMatrix& rho, const IndexCoding& coding,
                                     double tol = 1e-9);

/// Subadditivity of every basis relabeling: one report per permutation of
/// the four flat indices (24 total, ids in lexicographic order).
std::vector<InequalityReport> permutation_scan(const DensityMatrix& rho,
                                               const IndexCoding& coding, double tol = 1e-9);

/// The block-normalization chain on a 4x4 state. With
/// (p1, s1, p2, s2) = block_normalized_maps(rho) and
/// avg_S2 = p1 S(s1) + p2 S(s2) (absent blocks contribute zero):
///   block-concavity       S2 >= avg_S2
///   improved-chain-upper  S1 + S2 >= S1 + avg_S2
///   improved-chain-lower  S1 + avg_S2 >= S(rho)
/// where S1, S2 are the entropies of the two partial-trace marginals.
std::vector<InequalityReport> improved_chain_check(const DensityMatrix& rho, double tol = 1e-9);

}  // namespace entroq
