#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace entroq {

using Complex = std::complex<double>;

/// Dense square matrix of complex doubles, row-major storage.
///
/// This is the numeric substrate for every state and unitary in the
/// library. Dimensions stay small (<= ~16), so all operations are plain
/// O(n^2)/O(n^3) loops with no blocking.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(int dim);

  /// Row-major entries; throws std::invalid_argument unless
  /// entries.size() == dim*dim and every entry is finite.
  ComplexMatrix(int dim, std::vector<Complex> entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(const std::vector<double>& values);
  static ComplexMatrix diagonal(const std::vector<Complex>& values);

  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }

  Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Largest entry magnitude.
  double max_abs() const;
  double frobenius_norm() const;

  /// max_ij |M_ij - conj(M_ji)|
  double hermiticity_defect() const;
  /// max_ij |(M M^dag - I)_ij|
  double unitarity_defect() const;

  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

  /// Matrix product.
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

/// max_ij |A_ij - B_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product: entry (a*i+k, a*j+l) = A(i,j)*B(k,l), a = dim(B).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// U M U^dag. Throws NotUnitary when ||U U^dag - I||_max > 1e-10 and
/// DimensionMismatch when shapes differ.
ComplexMatrix conjugate(const ComplexMatrix& m, const ComplexMatrix& u);

}  // namespace entroq
