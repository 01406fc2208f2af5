#pragma once

#include <cstdint>
#include <random>

#include "entroq/density_matrix.hpp"

namespace entroq {

/// Seedable 64-bit generator (mt19937_64 core) with hand-rolled mappings so
/// every drawn double is a pure function of the seed, independent of the
/// standard library's distribution implementations.
class Rng64 {
 public:
  explicit Rng64(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1): top 53 bits of the raw draw.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (pairs cached).
  double gaussian();

  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  Complex complex_gaussian();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Stream-split rule for parallel ensembles: trial i draws from
/// seed XOR i * 0x9E3779B97F4A7C15.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial);

enum class EnsembleMeasure { hilbert_schmidt, pure_haar };

/// Parse "hilbert_schmidt" / "pure_haar"; throws UnknownLabel otherwise.
EnsembleMeasure measure_from_name(const std::string& name);
const char* measure_name(EnsembleMeasure measure);

/// Seeded random density matrix.
///
/// hilbert_schmidt: G G^dag / Tr(G G^dag) with G a dim x rank matrix of
/// independent standard complex Gaussians. pure_haar: projector onto a
/// Haar-random unit vector (rank must be 1 for the projector to be one).
/// Deterministic in (dim, rank, seed, measure). Throws BadRank unless
/// 1 <= rank <= dim.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed, EnsembleMeasure measure);

/// Haar-distributed unitary: Gram-Schmidt orthonormalization of a square
/// complex Gaussian matrix (positive-diagonal R fixes the phases).
ComplexMatrix haar_unitary(int dim, Rng64& rng);

}  // namespace entroq
