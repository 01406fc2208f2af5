#include "entroq/random_states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entroq/errors.hpp"

namespace entroq {

double Rng64::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0,1] so the log is finite.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

Complex Rng64::complex_gaussian() {
  constexpr double kInvSqrt2 = 0.7071067811865475244;
  const double re = gaussian() * kInvSqrt2;
  const double im = gaussian() * kInvSqrt2;
  return {re, im};
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial) {
  return base_seed ^ (trial * 0x9E3779B97F4A7C15ULL);
}

EnsembleMeasure measure_from_name(const std::string& name) {
  if (name == "hilbert_schmidt") return EnsembleMeasure::hilbert_schmidt;
  if (name == "pure_haar") return EnsembleMeasure::pure_haar;
  throw UnknownLabel("unknown ensemble measure '" + name + "'");
}

const char* measure_name(EnsembleMeasure measure) {
  return measure == EnsembleMeasure::hilbert_schmidt ? "hilbert_schmidt" : "pure_haar";
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed, EnsembleMeasure measure) {
  if (dim <= 0) throw ParameterOutOfRange("random_density: dimension must be positive");
  if (rank < 1 || rank > dim) throw BadRank("random_density: rank must lie in [1, dim]");

  Rng64 rng(seed);

  if (measure == EnsembleMeasure::pure_haar) {
    std::vector<Complex> vec(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    for (auto& z : vec) {
      z = rng.complex_gaussian();
      norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        m(i, j) = vec[static_cast<std::size_t>(i)] * std::conj(vec[static_cast<std::size_t>(j)]) *
                  (inv * inv);
    return DensityMatrix(std::move(m), {dim});
  }

  // Ginibre block, row-major draw order.
  std::vector<Complex> g(static_cast<std::size_t>(dim) * rank);
  for (auto& z : g) z = rng.complex_gaussian();

  ComplexMatrix m(dim);
  double tr = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j <= i; ++j) {
      Complex s(0.0, 0.0);
      for (int k = 0; k < rank; ++k)
        s += g[static_cast<std::size_t>(i) * rank + k] *
             std::conj(g[static_cast<std::size_t>(j) * rank + k]);
      if (i == j) {
        m(i, i) = Complex(s.real(), 0.0);
        tr += s.real();
      } else {
        m(i, j) = s;
        m(j, i) = std::conj(s);
      }
    }
  }
  m *= Complex(1.0 / tr, 0.0);
  return DensityMatrix(std::move(m), {dim});
}

ComplexMatrix haar_unitary(int dim, Rng64& rng) {
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();

  // Modified Gram-Schmidt over columns. The implicit R has a positive real
  // diagonal, which is exactly the phase fixing the Haar measure needs.
  for (int k = 0; k < dim; ++k) {
    for (int prev = 0; prev < k; ++prev) {
      Complex proj(0.0, 0.0);
      for (int r = 0; r < dim; ++r) proj += std::conj(g(r, prev)) * g(r, k);
      for (int r = 0; r < dim; ++r) g(r, k) -= proj * g(r, prev);
    }
    double norm2 = 0.0;
    for (int r = 0; r < dim; ++r) norm2 += std::norm(g(r, k));
    const double inv = 1.0 / std::sqrt(norm2);
    for (int r = 0; r < dim; ++r) g(r, k) *= inv;
  }
  return g;
}

}  // namespace entroq
