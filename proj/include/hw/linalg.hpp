#pragma once

// Dense complex linear algebra on small Hilbert spaces.
//
// Joint qubit-boson operators use the qubit-major index convention: the
// basis vector |i>|n> (qubit i, Fock level n) sits at index i * N + n. Every
// module that touches joint operators relies on it, in particular the 2x2
// block view used by the Wigner evaluator.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hw/tolerances.hpp"

namespace hw {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

enum class Subsystem { Qubit, Boson };

/// Largest entrywise deviation |a_ij - b_ij|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// True when the shapes match and every entry differs by at most `tol`.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kTolerances.hermiticity);

/// Hermitian, unit-trace, positive-semidefinite operator with its subsystem
/// dimensions. Dimensions are either {d} for a single factor or {2, N} for a
/// qubit-boson pair; the constructor validates every invariant.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::vector<int> dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  bool is_bipartite() const { return dims_.size() == 2; }
  // Fock dimension of a bipartite state or of a single bosonic factor.
  int fock_dim() const { return dims_.back(); }

  Complex operator()(int r, int c) const { return matrix_(r, c); }

 private:
  ComplexMatrix matrix_;
  std::vector<int> dims_;
};

/// Kronecker product, qubit-major: (a (x) b)(i*nb + n, j*nb + m) = a(i,j) b(n,m).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the kept subsystem of a bipartite state.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Transpose of the qubit indices only: (i n, j m) -> (j n, i m).
ComplexMatrix partial_transpose_qubit(const ComplexMatrix& m, int fock_dim);
ComplexMatrix partial_transpose_qubit(const DensityMatrix& rho);

/// All eigenvalues of a Hermitian matrix in ascending order. Deterministic for
/// identical inputs. Throws ValidationError on non-Hermitian input.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

/// Half the trace norm of the difference of two Hermitian operators.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(G) for an anti-Hermitian generator G = iH, evaluated through the
/// eigendecomposition of H so the result is unitary to rounding.
ComplexMatrix unitary_exp(const ComplexMatrix& generator);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Truncated bosonic lowering operator on Fock levels 0..n-1.
ComplexMatrix annihilation(int n);

}  // namespace hw
