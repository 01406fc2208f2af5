#include "entroq/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entroq/errors.hpp"

namespace entroq {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kHermiticityTol = 1e-10;
constexpr double kOffDiagTarget = 1e-14;

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  const double herm = m.hermiticity_defect();
  if (herm > kHermiticityTol) {
    throw NotHermitian("hermitian_eigensystem: input defect " + std::to_string(herm));
  }

  const int n = m.dim();

  // Work on the exactly Hermitian average so sub-tolerance asymmetry in the
  // input cannot leak into the rotations.
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = Complex(m(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = kOffDiagTarget * std::max(1.0, a.frobenius_norm());

  bool converged = n == 1;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_mass(a) < target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double ab = std::abs(apq);
        if (ab == 0.0) continue;

        // Unitary 2x2 rotation that zeroes a(p,q): a phase factor absorbs
        // arg(a_pq), then a real Givens rotation with the smaller-angle
        // root of t^2 - 2*tau*t - 1 = 0.
        const Complex ph = apq / ab;
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double tau = (gamma - alpha) / (2.0 * ab);
        const double t = tau >= 0.0 ? -1.0 / (tau + std::hypot(1.0, tau))
                                    : 1.0 / (-tau + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp + s * std::conj(ph) * arq;
          a(r, q) = -s * ph * arp + c * arq;
          a(p, r) = std::conj(a(r, p));
          a(q, r) = std::conj(a(r, q));
        }
        a(p, p) = alpha * c * c + 2.0 * ab * c * s + gamma * s * s;
        a(q, q) = alpha * s * s - 2.0 * ab * c * s + gamma * c * c;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (int r = 0; r < n; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = c * vrp + s * std::conj(ph) * vrq;
          v(r, q) = -s * ph * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged && off_diagonal_mass(a) >= target) {
    throw NoConvergence("hermitian_eigensystem: sweep budget exhausted");
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es;
  es.values.resize(static_cast<std::size_t>(n));
  es.vectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    es.values[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)],
                                               order[static_cast<std::size_t>(k)])
                                                 .real();
    for (int r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[static_cast<std::size_t>(k)]);
  }
  return es;
}

}  // namespace entroq
