#include "entroq/density_matrix.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "entroq/eigensolver.hpp"
#include "entroq/errors.hpp"

namespace entroq {

namespace {

constexpr double kStateTol = 1e-10;

int dims_product(const std::vector<int>& dims) {
  int p = 1;
  for (int d : dims) p *= d;
  return p;
}

}  // namespace

ValidationReport validate(const ComplexMatrix& m, double tol) {
  ValidationReport report;
  report.hermiticity_defect = m.hermiticity_defect();
  report.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));

  // Eigenvalues of the Hermitian part; for Hermitian input this is exact.
  const int n = m.dim();
  ComplexMatrix herm(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) herm(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  const EigenSystem es = hermitian_eigensystem(herm);
  report.min_eigenvalue = es.values.front();

  report.valid = report.hermiticity_defect <= tol && report.trace_defect <= tol &&
                 report.min_eigenvalue >= -tol;
  return report;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<int> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (dims_.empty()) dims_ = {matrix_.dim()};
  for (int d : dims_) {
    if (d <= 0) throw InvalidState("DensityMatrix: nonpositive subsystem dimension");
  }
  if (dims_product(dims_) != matrix_.dim()) {
    throw DimensionMismatch("DensityMatrix: dims product does not match matrix dimension");
  }
  const double herm = matrix_.hermiticity_defect();
  if (herm > kStateTol) {
    throw InvalidState("DensityMatrix: hermiticity defect " + std::to_string(herm));
  }
  const double tr = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (tr > kStateTol) {
    throw InvalidState("DensityMatrix: trace defect " + std::to_string(tr));
  }
}

DensityMatrix DensityMatrix::as_bipartite(int d1, int d2) const {
  if (d1 * d2 != dim()) {
    throw DimensionMismatch("as_bipartite: split does not match matrix dimension");
  }
  return DensityMatrix(matrix_, {d1, d2});
}

DensityMatrix DensityMatrix::as_unipartite() const {
  return DensityMatrix(matrix_, {dim()});
}

DensityMatrix max_mixed(int dim) {
  if (dim <= 0) throw ParameterOutOfRange("max_mixed: dimension must be positive");
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= Complex(1.0 / dim, 0.0);
  return DensityMatrix(std::move(m), {dim});
}

DensityMatrix bell_phi_plus() {
  ComplexMatrix m(4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix pure_basis(int dim, int k) {
  if (dim <= 0) throw ParameterOutOfRange("pure_basis: dimension must be positive");
  if (k < 1 || k > dim) throw ParameterOutOfRange("pure_basis: index out of range");
  ComplexMatrix m(dim);
  m(k - 1, k - 1) = 1.0;
  return DensityMatrix(std::move(m), {dim});
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterOutOfRange("werner: p must lie in [0,1]");
  ComplexMatrix m = ComplexMatrix::identity(4);
  m *= Complex((1.0 - p) / 4.0, 0.0);
  m(0, 0) += 0.5 * p;
  m(3, 3) += 0.5 * p;
  m(0, 3) += 0.5 * p;
  m(3, 0) += 0.5 * p;
  return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix classically_correlated() {
  ComplexMatrix m(4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  return DensityMatrix(std::move(m), {2, 2});
}

namespace {

// Splits "name(a,b)" into name and raw argument strings.
bool split_label(const std::string& label, std::string& name, std::vector<std::string>& args) {
  const auto open = label.find('(');
  if (open == std::string::npos) {
    name = label;
    return true;
  }
  if (label.back() != ')') return false;
  name = label.substr(0, open);
  std::string body = label.substr(open + 1, label.size() - open - 2);
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      args.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) args.push_back(cur);
  return true;
}

double parse_real(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == nullptr || *end != '\0') throw UnknownLabel("bad numeric argument '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  const double v = parse_real(s);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) throw UnknownLabel("expected integer argument '" + s + "'");
  return i;
}

}  // namespace

DensityMatrix named_state(const std::string& label) {
  std::string name;
  std::vector<std::string> args;
  if (!split_label(label, name, args)) throw UnknownLabel("malformed state label '" + label + "'");

  if (name == "max_mixed") {
    if (args.size() != 1) throw UnknownLabel("max_mixed expects one argument");
    return max_mixed(parse_int(args[0]));
  }
  if (name == "bell_phi_plus") {
    if (!args.empty()) throw UnknownLabel("bell_phi_plus takes no arguments");
    return bell_phi_plus();
  }
  if (name == "pure_basis") {
    if (args.size() != 2) throw UnknownLabel("pure_basis expects two arguments");
    return pure_basis(parse_int(args[0]), parse_int(args[1]));
  }
  if (name == "werner") {
    if (args.size() != 1) throw UnknownLabel("werner expects one argument");
    return werner(parse_real(args[0]));
  }
  if (name == "classically_correlated") {
    if (!args.empty()) throw UnknownLabel("classically_correlated takes no arguments");
    return classically_correlated();
  }
  throw UnknownLabel("unknown state label '" + label + "'");
}

}  // namespace entroq
