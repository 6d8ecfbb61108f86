#pragma once

// Kernel operators of the hybrid Wigner function.
//
//   qubit:  Delta_q(phi, theta) = 1/2 U (I - sqrt(3) sigma_z) U^dagger,
//           U = exp(i sigma_z phi) exp(i sigma_y theta) exp(i sigma_z Phi)
//   boson:  Delta_b(beta) = 2/pi D(beta) Pi D(beta)^dagger = 2/pi D(2 beta) Pi
//
// Delta_q does not depend on the gauge angle Phi, and equals
// 1/2 I - sqrt(3)/2 n.sigma with the unit axis returned by qubit_kernel_axis().

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "hw/linalg.hpp"
#include "hw/states.hpp"

namespace hw {

struct PhasePoint {
  double phi = 0.0;    // [0, 2 pi)
  double theta = 0.0;  // [0, pi / 2]
  Complex beta;

  /// Reduces phi modulo 2 pi; rejects theta outside [0, pi / 2] or a
  /// non-finite beta.
  static PhasePoint make(double phi, double theta, Complex beta);
};

struct Axis3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// n = (-sin 2theta cos 2phi, sin 2theta sin 2phi, cos 2theta).
Axis3 qubit_kernel_axis(double phi, double theta);

/// Delta_q built from the three SU(2) rotations, gauge angle included.
ComplexMatrix qubit_kernel(double phi, double theta, double gauge = 0.0);

/// Truncated-space kernel (2/pi) D(beta) Pi D(beta)^dagger with D from
/// unitary_exp of the truncated generator. Requires the coherent state
/// |2 beta> to fit the cutoff (tail mass below kTolerances.kernel_tail).
ComplexMatrix bosonic_kernel(Complex beta, const FockConfig& fock);

/// Same operator assembled as (2/pi) D(2 beta) Pi in the truncated space.
ComplexMatrix bosonic_kernel_via_double_displacement(Complex beta, const FockConfig& fock);

/// True when |2 beta> fits the cutoff for bosonic_kernel().
bool kernel_fits_cutoff(Complex beta, const FockConfig& fock);

/// Upper bound on |beta| accepted by the exact element evaluators.
inline constexpr double kMaxKernelBeta = 15.0;

/// Exact Fock matrix elements <n|Delta_b(beta)|m>, 0 <= n, m < n_levels,
/// of the infinite-dimensional kernel, from a normalized Laguerre recurrence
/// along each diagonal n - m = k. Unlike bosonic_kernel() this carries no
/// truncation error, so it only needs the state, not the kernel, to fit
/// the cutoff.
ComplexMatrix bosonic_kernel_exact(Complex beta, int n_levels);

/// Delta_q (x) Delta_b under the qubit-major convention.
ComplexMatrix hybrid_kernel(const PhasePoint& p, const FockConfig& fock);

/// Precomputed beta-independent coefficients of the diagonal Laguerre
/// recurrence, shared by every evaluation at a given Fock dimension.
class LaguerreTable {
 public:
  explicit LaguerreTable(int n_levels);

  int levels() const { return n_; }

  /// Calls visit(k, prefactor_k, f) for every diagonal k = n - m, where
  /// <m + k| Delta_b |m> = prefactor_k * (-1)^m * f[m] for m < levels - k.
  /// f is real; `scratch` must hold at least levels() doubles.
  template <class Visit>
  void for_each_diagonal(Complex beta, std::vector<double>& scratch, Visit&& visit) const;

 private:
  int n_;
  // Row-major by diagonal k, entries m = 0..n-1-k.
  std::vector<std::size_t> offset_;
  std::vector<double> a_;  // (2m - 1 + k) / sqrt(m (m + k))
  std::vector<double> b_;  // 1 / sqrt(m (m + k))
  std::vector<double> c_;  // sqrt((m - 1)(m - 1 + k) / (m (m + k)))
  std::vector<double> inv_sqrt_;
};

/// Memo of truncated-space kernels keyed on (beta, cutoff). Safe for
/// concurrent readers and writers.
class BosonicKernelCache {
 public:
  std::shared_ptr<const ComplexMatrix> get(Complex beta, const FockConfig& fock);
  std::size_t size() const;

 private:
  using Key = std::pair<std::pair<std::uint64_t, std::uint64_t>, int>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const ComplexMatrix>> entries_;
};

// ---------------------------------------------------------------------------

template <class Visit>
void LaguerreTable::for_each_diagonal(Complex beta, std::vector<double>& f, Visit&& visit) const {
  const Complex g = 2.0 * beta;
  const double x = std::norm(g);
  Complex prefactor = (2.0 / 3.14159265358979323846) * std::exp(-0.5 * x);
  for (int k = 0; k < n_; ++k) {
    if (k > 0) prefactor *= g * inv_sqrt_[k];
    const int len = n_ - k;
    const std::size_t o = offset_[k];
    f[0] = 1.0;
    if (len > 1) f[1] = (1.0 + k - x) * inv_sqrt_[k + 1];
    for (int m = 2; m < len; ++m) {
      f[m] = (a_[o + m] - x * b_[o + m]) * f[m - 1] - c_[o + m] * f[m - 2];
    }
    visit(k, prefactor, static_cast<const std::vector<double>&>(f));
  }
}

}  // namespace hw
