#pragma once

// Generalized Wigner function W(phi, theta, beta) = Tr[rho (Delta_q (x) Delta_b)].
//
// Split rho into 2x2 bosonic blocks B_ij = <i|rho|j>. With
// t_ij(beta) = Tr_b[B_ij Delta_b(beta)] the function is affine in the qubit
// kernel axis n(phi, theta):
//
//   W = c0 + cx nx + cy ny + cz nz,
//   c0 = (t00 + t11) / 2,  cz = -sqrt(3)/2 (t00 - t11),
//   cx = -sqrt(3) Re t01,  cy = sqrt(3) Im t01.
//
// The four traces cost O(N^2) per beta; each angular node then costs one
// affine evaluation.

#include <complex>
#include <vector>

#include "hw/kernels.hpp"
#include "hw/linalg.hpp"
#include "hw/states.hpp"

namespace hw {

struct QubitAffine {
  double c0 = 0.0, cx = 0.0, cy = 0.0, cz = 0.0;

  double at(const Axis3& n) const { return ((c0 + cx * n.x) + cy * n.y) + cz * n.z; }
};

class WignerEvaluator {
 public:
  /// rho must be a qubit-boson state.
  explicit WignerEvaluator(const DensityMatrix& rho);

  int fock_dim() const { return n_; }
  const ComplexMatrix& block(int i, int j) const { return blocks_[2 * i + j]; }

  /// Affine coefficients at beta from the exact kernel elements. Throws
  /// NumericalError if t00 or t11 carries an imaginary part above 1e-10.
  QubitAffine coefficients(Complex beta) const;

  /// sum_ij (Delta_q)_ji Tr_b[B_ij Delta_b(beta)] with the residue check.
  double value(const PhasePoint& p) const;

 private:
  struct Diagonals {
    // upper[k][m] = (-1)^m B(m, m + k), lower[k][m] = (-1)^m B(m + k, m)
    std::vector<std::vector<Complex>> upper, lower;
  };
  Complex trace_with_kernel(const Diagonals& d, Complex beta, std::vector<double>& scratch) const;

  int n_;
  ComplexMatrix blocks_[4];
  Diagonals diag_[3];  // blocks 00, 11, 01
  LaguerreTable table_;
};

/// Tr[rho_q Delta_q(phi, theta)].
double wigner_qubit(const DensityMatrix& rho_q, double phi, double theta);

/// c0 = 1/2 and c = -sqrt(3)/2 times the Bloch vector.
QubitAffine qubit_affine(const DensityMatrix& rho_q);

/// Tr[rho_b Delta_b(beta)] with exact kernel elements.
double wigner_bosonic(const DensityMatrix& rho_b, Complex beta);

/// Evaluator for repeated bosonic values of one state.
class BosonicWigner {
 public:
  explicit BosonicWigner(const DensityMatrix& rho_b);
  double operator()(Complex beta) const;

 private:
  int n_;
  std::vector<std::vector<Complex>> upper_, lower_;
  LaguerreTable table_;
};

/// Closed form for the pure qubit-cat state:
///   1/(2pi) e^{-2|beta-alpha|^2} [1 - sqrt3 cos2theta]
/// + 1/(2pi) e^{-2|beta+alpha|^2} [1 + sqrt3 cos2theta]
/// + sqrt3/pi e^{-2|beta|^2} sin2theta cos 2(phi + 2 Im[beta alpha^*]).
double closed_form_cat_wigner(Complex alpha, const PhasePoint& p);

/// Closed form for the decohered cat state, with alpha' = alpha e^{-gamma t/2},
/// A = e^{-4 kappa t} and the coherence B.
double closed_form_decohered_wigner(const CatStateParams& params, const PhasePoint& p);

/// sqrt3 sqrt(a(1-a)) sin2theta cos(chi + 2phi) + sqrt3/2 (1-2a) cos2theta + 1/2.
double closed_form_pure_qubit_wigner(double a, double chi, double phi, double theta);

/// sqrt3/2 (1-2a) cos2theta + 1/2.
double closed_form_diagonal_qubit_wigner(double a, double theta);

}  // namespace hw
