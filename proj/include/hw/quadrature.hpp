#pragma once

// Discrete realizations of the hybrid phase-space measure
//
//   dOmega = (1/pi) sin(2 theta) dphi dtheta d^2 beta,
//   phi in [0, 2 pi), theta in [0, pi/2], beta in the square [-R, R]^2.
//
// phi uses uniform periodic nodes, theta a Gauss-Legendre rule whose weights
// absorb sin(2 theta) / pi, and beta a tensor Gauss-Legendre rule per axis.
// The angular weights sum to 2.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "hw/linalg.hpp"

namespace hw {

// Default node counts; see README for the convergence measurements behind them.
inline constexpr int kDefaultNPhi = 256;
inline constexpr int kDefaultNTheta = 128;
inline constexpr int kDefaultNBeta = 96;

/// |alpha| + 4: the Gaussians decay as e^{-2|beta -+ alpha|^2}, so the tail
/// beyond the square is below e^{-32}.
inline double default_beta_radius(double alpha_abs) { return alpha_abs + 4.0; }

struct GaussLegendre {
  std::vector<double> nodes;    // ascending in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
GaussLegendre gauss_legendre(int n);

/// Angular part of the grid. The flattened node arrays (theta-major, then
/// phi) hold the qubit kernel axis n(phi, theta) and the weight of each node;
/// they are zero-padded to a multiple of four so vector kernels need no tail.
struct AngularGrid {
  int n_phi = 0;
  int n_theta = 0;
  std::vector<double> phi;
  std::vector<double> phi_weights;
  std::vector<double> theta;
  std::vector<double> theta_weights;  // include sin(2 theta) / pi

  std::size_t node_count = 0;  // n_phi * n_theta, before padding
  std::vector<double> nx, ny, nz, w;

  // sum w, sum w nx, sum w ny, sum w nz
  double moment0 = 0.0, moment_x = 0.0, moment_y = 0.0, moment_z = 0.0;

  double weight_sum() const { return moment0; }
};

struct BetaGrid {
  int n_beta = 0;  // per axis
  double radius = 0.0;
  std::vector<double> axis;          // nodes on [-R, R]
  std::vector<double> axis_weights;  // sum to 2R
  // Row-major flattening: index iy * n_beta + ix, beta = axis[ix] + i axis[iy].
  std::vector<Complex> nodes;
  std::vector<double> weights;
};

struct QuadratureGrid {
  AngularGrid angular;
  BetaGrid beta;
};

/// Validates counts >= 4 (ValidationError otherwise).
AngularGrid build_angular_grid(int n_phi, int n_theta);
/// Validates n_beta >= 4 and a finite R > 0.
BetaGrid build_beta_grid(int n_beta, double radius);
QuadratureGrid build_grid(int n_phi, int n_theta, int n_beta, double radius);

/// Same radius, every count doubled.
AngularGrid doubled(const AngularGrid& g);
BetaGrid doubled(const BetaGrid& g);
QuadratureGrid doubled(const QuadratureGrid& g);

struct GridNode {
  double phi;
  double theta;
  Complex beta;
};

/// Weighted sum over every node of the full grid. Each beta node's angular
/// sum runs in node order, the per-beta results are combined pairwise, so the
/// result does not depend on the worker count. Throws NumericalError naming
/// the node if f returns a non-finite value.
double integrate(const std::function<double(const GridNode&)>& f, const QuadratureGrid& grid);

/// Integral of f(phi, theta) against dnu = (1/pi) sin(2 theta) dphi dtheta.
double integrate_angular(const std::function<double(double, double)>& f, const AngularGrid& grid);

/// Integral of f(beta) against d^2 beta over the square.
double integrate_beta(const std::function<double(Complex)>& f, const BetaGrid& grid);

}  // namespace hw
