#include "entroq/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "entroq/errors.hpp"

namespace entroq {

ComplexMatrix::ComplexMatrix(int dim)
    : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0)) {
  if (dim <= 0) {
    throw std::invalid_argument("ComplexMatrix: dimension must be positive");
  }
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim <= 0) {
    throw std::invalid_argument("ComplexMatrix: dimension must be positive");
  }
  if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match dim^2");
  }
  if (!all_finite()) {
    throw std::invalid_argument("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& values) {
  ComplexMatrix m(static_cast<int>(values.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& values) {
  ComplexMatrix m(static_cast<int>(values.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

double ComplexMatrix::unitarity_defect() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      Complex s(0.0, 0.0);
      for (int k = 0; k < dim_; ++k) s += (*this)(i, k) * std::conj((*this)(j, k));
      if (i == j) s -= 1.0;
      m = std::max(m, std::abs(s));
    }
  }
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix addition: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix subtraction: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix product: dimension mismatch");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) out(nb * i + k, nb * j + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m, const ComplexMatrix& u) {
  if (m.dim() != u.dim()) throw DimensionMismatch("conjugate: dimension mismatch");
  const double defect = u.unitarity_defect();
  if (defect > 1e-10) {
    throw NotUnitary("conjugate: matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
  return u * m * u.adjoint();
}

}  // namespace entroq
