#include "entroq/entropy.hpp"

#include <cmath>
#include <string>

#include "entroq/eigensolver.hpp"
#include "entroq/errors.hpp"

namespace entroq {

namespace {

constexpr double kEigNegTol = 1e-10;
constexpr double kZeroCut = 1e-12;

double plogp_sum(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

}  // namespace

bool ProbabilityVector::is_valid(double tol) const {
  double sum = 0.0;
  for (double v : components) {
    if (!(v >= 0.0 && v <= 1.0 + tol)) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

ProbabilityVector ProbabilityVector::clean(std::vector<double> raw, double neg_tol,
                                           double zero_cut) {
  double sum = 0.0;
  for (double& v : raw) {
    if (v < -neg_tol) {
      throw InvalidDistribution("probability " + std::to_string(v) + " below -" +
                                std::to_string(neg_tol));
    }
    if (v < zero_cut) v = 0.0;
    sum += v;
  }
  if (sum <= 0.0) throw InvalidDistribution("distribution sums to zero");
  for (double& v : raw) v /= sum;
  return ProbabilityVector{std::move(raw)};
}

double shannon(const ProbabilityVector& p) {
  if (!p.is_valid()) throw InvalidDistribution("shannon: not a probability vector");
  return plogp_sum(p.components);
}

ProbabilityVector eigenvalue_distribution(const DensityMatrix& rho) {
  const EigenSystem es = hermitian_eigensystem(rho.matrix());
  if (es.values.front() < -kEigNegTol) {
    throw InvalidState("eigenvalue " + std::to_string(es.values.front()) + " below -1e-10");
  }
  std::vector<double> vals = es.values;
  double sum = 0.0;
  for (double& v : vals) {
    if (v < kZeroCut) v = 0.0;
    sum += v;
  }
  if (sum <= 0.0) throw InvalidState("eigenvalues sum to zero");
  for (double& v : vals) v /= sum;
  return ProbabilityVector{std::move(vals)};
}

double von_neumann(const DensityMatrix& rho) {
  return plogp_sum(eigenvalue_distribution(rho).components);
}

InequalityReport make_report(std::string name, double lhs, double rhs, double tolerance) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tolerance;
  r.holds = r.slack >= -tolerance;
  return r;
}

InequalityReport subadditivity_check(const DensityMatrix& rho, const IndexCoding& coding,
                                     double tol) {
  const auto [m1, m2] = coded_marginals(rho, coding);
  const double joint = von_neumann(rho);
  const double marginals = von_neumann(m1) + von_neumann(m2);
  InequalityReport r = make_report("subadditivity:" + std::string(coding.name()), joint,
                                   marginals, tol);
  r.meta.emplace_back("coding", std::string(coding.name()));
  return r;
}

std::vector<InequalityReport> permutation_scan(const DensityMatrix& rho,
                                               const IndexCoding& coding, double tol) {
  std::vector<InequalityReport> out;
  const auto perms = Permutation::all(4);
  out.reserve(perms.size());
  for (std::size_t id = 0; id < perms.size(); ++id) {
    InequalityReport r = subadditivity_check(permute_basis(rho, perms[id]), coding, tol);
    r.meta.emplace_back("permutation", std::to_string(id));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<InequalityReport> improved_chain_check(const DensityMatrix& rho, double tol) {
  const BlockSplit split = block_normalized_maps(rho);
  double avg_s2 = 0.0;
  if (split.sigma1) avg_s2 += split.p1 * von_neumann(*split.sigma1);
  if (split.sigma2) avg_s2 += split.p2 * von_neumann(*split.sigma2);

  const DensityMatrix pair_view = rho.as_bipartite(2, 2);
  const double s1 = von_neumann(partial_trace(pair_view, Subsystem::first));
  const double s2 = von_neumann(partial_trace(pair_view, Subsystem::second));
  const double joint = von_neumann(rho);

  std::vector<InequalityReport> out;
  out.push_back(make_report("block-concavity", avg_s2, s2, tol));
  out.push_back(make_report("improved-chain-upper", s1 + avg_s2, s1 + s2, tol));
  out.push_back(make_report("improved-chain-lower", joint, s1 + avg_s2, tol));
  return out;
}

}  // namespace entroq
