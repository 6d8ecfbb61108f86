#pragma once

// Seeded generators for property tests.

#include <cmath>
#include <numbers>
#include <random>

#include "hw/kernels.hpp"
#include "hw/linalg.hpp"
#include "hw/states.hpp"

namespace hw::proptest {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex_normal() { return {normal(), normal()}; }

  ComplexMatrix matrix(int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = complex_normal();
    return m;
  }

  ComplexMatrix hermitian(int n) {
    const ComplexMatrix m = matrix(n, n);
    return 0.5 * (m + m.adjoint());
  }

  /// G G^dagger / Tr with G of the given rank.
  DensityMatrix density(std::vector<int> dims, int rank = -1) {
    int d = 1;
    for (int x : dims) d *= x;
    if (rank < 1) rank = d;
    const ComplexMatrix g = matrix(d, rank);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(std::move(m), std::move(dims));
  }

  /// Uniform direction times a length.
  BlochVector direction(double length) {
    double x, y, z, n;
    do {
      x = normal();
      y = normal();
      z = normal();
      n = std::sqrt(x * x + y * y + z * z);
    } while (n < 1e-8);
    return {length * x / n, length * y / n, length * z / n};
  }

  BlochVector bloch_in_ball() { return direction(std::cbrt(uniform())); }

  PhasePoint phase_point(double radius) {
    return {uniform(0.0, 2.0 * std::numbers::pi), uniform(0.0, 0.5 * std::numbers::pi),
            {uniform(-radius, radius), uniform(-radius, radius)}};
  }

  /// Random state on qubit (x) Fock supported on the lowest `support` levels.
  DensityMatrix hybrid_low_fock(int n, int support, int rank = 3) {
    const ComplexMatrix g = matrix(2 * support, rank);
    ComplexMatrix m = ComplexMatrix::Zero(2 * n, 2 * n);
    ComplexMatrix small = g * g.adjoint();
    small /= small.trace().real();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.block(i * n, j * n, support, support) = small.block(i * support, j * support, support, support);
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(std::move(m), {2, n});
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hw::proptest
