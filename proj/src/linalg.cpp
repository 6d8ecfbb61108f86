#include "hw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hw/error.hpp"

namespace hw {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw ValidationError(os.str());
  }
}

std::vector<double> eigenvalues_unchecked(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Hermiticity check scaled to the magnitude of the operator, so kernels of
// size 2/pi and density matrices of size 1 are judged alike.
void require_hermitian(const ComplexMatrix& m, const char* what) {
  require_square(m, what);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double defect = hermiticity_defect(m);
  if (defect > kTolerances.hermiticity * scale) {
    std::ostringstream os;
    os << what << ": matrix is not Hermitian (max |M - M^dagger| = " << defect << ")";
    throw ValidationError(os.str());
  }
}

}  // namespace

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_defect(m) <= tol; }

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<int> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (dims_.empty() || dims_.size() > 2) {
    throw ValidationError("DensityMatrix: expected one or two subsystem dimensions");
  }
  long total = 1;
  for (int d : dims_) {
    if (d < 1) throw ValidationError("DensityMatrix: subsystem dimensions must be positive");
    total *= d;
  }
  if (dims_.size() == 2 && dims_[0] != 2) {
    throw ValidationError("DensityMatrix: bipartite states must list the qubit (dimension 2) first");
  }
  if (matrix_.rows() != total || matrix_.cols() != total) {
    std::ostringstream os;
    os << "DensityMatrix: matrix is " << matrix_.rows() << "x" << matrix_.cols()
       << " but the dimensions imply " << total;
    throw ValidationError(os.str());
  }
  if (!matrix_.allFinite()) throw ValidationError("DensityMatrix: non-finite entry");
  const double herm = hermiticity_defect(matrix_);
  if (herm > kTolerances.hermiticity) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (defect " << herm << ")";
    throw ValidationError(os.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTolerances.trace) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr.real() << (tr.imag() < 0 ? "" : "+") << tr.imag()
       << "i differs from 1";
    throw ValidationError(os.str());
  }
  const double lowest = eigenvalues_unchecked(matrix_).front();
  if (lowest < kTolerances.psd_floor) {
    std::ostringstream os;
    os << "DensityMatrix: not positive semidefinite (lowest eigenvalue " << lowest << ")";
    throw ValidationError(os.str());
  }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i) {
    for (Eigen::Index j = 0; j < ac; ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dims().size() != 1 || b.dims().size() != 1 || a.dim() != 2) {
    throw ValidationError("tensor: expected a single qubit factor and a single bosonic factor");
  }
  return DensityMatrix(tensor(a.matrix(), b.matrix()), {2, b.dim()});
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (!rho.is_bipartite()) {
    throw ValidationError("partial_trace: state has a single subsystem");
  }
  const int n = rho.fock_dim();
  const ComplexMatrix& m = rho.matrix();
  if (keep == Subsystem::Qubit) {
    ComplexMatrix q(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        q(i, j) = m.block(i * n, j * n, n, n).trace();
      }
    }
    // Re-symmetrize: the block traces are summed in different orders.
    q = 0.5 * (q + q.adjoint()).eval();
    return DensityMatrix(std::move(q), {2});
  }
  ComplexMatrix b = m.block(0, 0, n, n) + m.block(n, n, n, n);
  return DensityMatrix(std::move(b), {n});
}

ComplexMatrix partial_transpose_qubit(const ComplexMatrix& m, int fock_dim) {
  const int n = fock_dim;
  if (n < 1 || m.rows() != 2 * n || m.cols() != 2 * n) {
    throw ValidationError("partial_transpose_qubit: matrix is not 2N x 2N");
  }
  ComplexMatrix out(2 * n, 2 * n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block(j * n, i * n, n, n) = m.block(i * n, j * n, n, n);
    }
  }
  return out;
}

ComplexMatrix partial_transpose_qubit(const DensityMatrix& rho) {
  if (!rho.is_bipartite()) {
    throw ValidationError("partial_transpose_qubit: state has a single subsystem");
  }
  return partial_transpose_qubit(rho.matrix(), rho.fock_dim());
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require_hermitian(m, "hermitian_eigenvalues");
  return eigenvalues_unchecked(m);
}

double trace_norm(const ComplexMatrix& m) {
  require_hermitian(m, "trace_norm");
  double sum = 0.0;
  for (double ev : eigenvalues_unchecked(m)) sum += std::abs(ev);
  return sum;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * trace_norm(a - b);
}

ComplexMatrix unitary_exp(const ComplexMatrix& generator) {
  require_square(generator, "unitary_exp");
  const double scale = std::max(1.0, generator.size() ? generator.cwiseAbs().maxCoeff() : 0.0);
  const double defect =
      generator.size() ? (generator + generator.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  if (defect > kTolerances.hermiticity * scale) {
    std::ostringstream os;
    os << "unitary_exp: generator is not anti-Hermitian (max |G + G^dagger| = " << defect << ")";
    throw ValidationError(os.str());
  }
  // G = iH with H = -iG Hermitian; exp(G) = V diag(exp(i lambda)) V^dagger.
  ComplexMatrix h = Complex(0.0, -1.0) * generator;
  h = 0.5 * (h + h.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("unitary_exp: eigensolver did not converge");
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const ComplexMatrix& v = solver.eigenvectors();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    phases(k) = std::polar(1.0, lambda(k));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }
ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}
ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

ComplexMatrix annihilation(int n) {
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

}  // namespace hw
