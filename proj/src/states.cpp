#include "hw/states.hpp"

#include <cmath>
#include <sstream>

#include "hw/error.hpp"

namespace hw {

namespace {

void require_unit_interval(double a, const char* what) {
  if (!(a >= 0.0 && a <= 1.0)) {
    std::ostringstream os;
    os << what << ": parameter a = " << a << " outside [0, 1]";
    throw ValidationError(os.str());
  }
}

// |q>|b> in the qubit-major joint space.
ComplexVector joint(int qubit, const ComplexVector& boson) {
  const Eigen::Index n = boson.size();
  ComplexVector out = ComplexVector::Zero(2 * n);
  out.segment(qubit * n, n) = boson;
  return out;
}

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) { return a * b.adjoint(); }

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

FockConfig::FockConfig(int n) : cutoff(n) {
  if (n < 2) throw ValidationError("FockConfig: cutoff must be at least 2");
}

FockConfig default_fock(double alpha_abs) {
  const double span = alpha_abs + 4.0;
  return FockConfig(std::max(24, static_cast<int>(std::ceil(span * span))));
}

CatStateParams::CatStateParams(Complex alpha_, double kappa_t_, double gamma_t_, FockConfig fock_)
    : alpha(alpha_), kappa_t(kappa_t_), gamma_t(gamma_t_), fock(fock_) {
  if (!std::isfinite(kappa_t) || !std::isfinite(gamma_t) || kappa_t < 0.0 || gamma_t < 0.0) {
    throw ValidationError("CatStateParams: damping parameters must be finite and nonnegative");
  }
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw ValidationError("CatStateParams: alpha must be finite");
  }
}

CatStateParams::CatStateParams(Complex alpha_, double kappa_t_, double gamma_t_)
    : CatStateParams(alpha_, kappa_t_, gamma_t_, default_fock(std::abs(alpha_))) {}

double CatStateParams::qubit_decay() const { return std::exp(-4.0 * kappa_t); }

double CatStateParams::coherence() const {
  return std::exp(-4.0 * kappa_t) * std::exp(-2.0 * std::norm(alpha) * (-std::expm1(-gamma_t)));
}

Complex CatStateParams::damped_alpha() const { return alpha * std::exp(-0.5 * gamma_t); }

double CatStateParams::norm_plus() const {
  return 2.0 + 2.0 * std::exp(-2.0 * std::norm(alpha) * std::exp(-gamma_t));
}

double CatStateParams::norm_minus() const {
  return 2.0 - 2.0 * std::exp(-2.0 * std::norm(alpha) * std::exp(-gamma_t));
}

DensityMatrix pure_qubit(double a, double chi) {
  require_unit_interval(a, "pure_qubit");
  if (!std::isfinite(chi)) throw ValidationError("pure_qubit: chi must be finite");
  ComplexVector psi(2);
  psi << std::sqrt(a), std::polar(std::sqrt(1.0 - a), chi);
  return DensityMatrix(outer(psi, psi), {2});
}

DensityMatrix diagonal_qubit(double a) {
  require_unit_interval(a, "diagonal_qubit");
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = 1.0 - a;
  return DensityMatrix(std::move(m), {2});
}

DensityMatrix bloch_qubit(const BlochVector& v) {
  // Rounding slack so unit vectors drawn from normalized Gaussians pass.
  if (!(v.norm() <= 1.0 + 1e-12)) {
    std::ostringstream os;
    os << "bloch_qubit: |a| = " << v.norm() << " exceeds 1";
    throw ValidationError(os.str());
  }
  ComplexMatrix m = 0.5 * (pauli::identity() + v.x * pauli::x() + v.y * pauli::y() + v.z * pauli::z());
  return DensityMatrix(std::move(m), {2});
}

DensityMatrix maximally_mixed_qubit() { return diagonal_qubit(0.5); }

BlochVector bloch_vector(const DensityMatrix& rho_q) {
  if (rho_q.dims().size() != 1 || rho_q.dim() != 2) {
    throw ValidationError("bloch_vector: expected a single-qubit state");
  }
  const ComplexMatrix& m = rho_q.matrix();
  return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

double purity(const DensityMatrix& rho) {
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().cwiseAbs2().sum();
}

ComplexVector coherent_vector(Complex alpha, const FockConfig& fock) {
  const int n = fock.cutoff;
  ComplexVector c(n);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int k = 1; k < n; ++k) c(k) = c(k - 1) * alpha / std::sqrt(static_cast<double>(k));
  const double norm2 = c.squaredNorm();
  if (1.0 - norm2 > kTolerances.coherent_norm_loss) {
    std::ostringstream os;
    os << "coherent_vector: Fock cutoff " << n << " keeps only " << norm2
       << " of the norm of |alpha| = " << std::abs(alpha);
    throw ValidationError(os.str());
  }
  return c / std::sqrt(norm2);
}

ComplexVector even_odd_cat(Complex alpha, int sign, const FockConfig& fock) {
  if (sign != 1 && sign != -1) throw ValidationError("even_odd_cat: sign must be +1 or -1");
  if (sign == -1 && std::abs(alpha) == 0.0) {
    throw ValidationError("even_odd_cat: the odd cat state is undefined at alpha = 0");
  }
  ComplexVector v = coherent_vector(alpha, fock) + static_cast<double>(sign) * coherent_vector(-alpha, fock);
  return v / v.norm();
}

ComplexVector fock_vector(int n, const FockConfig& fock) {
  if (n < 0 || n >= fock.cutoff) throw ValidationError("fock_vector: level outside the cutoff");
  ComplexVector v = ComplexVector::Zero(fock.cutoff);
  v(n) = 1.0;
  return v;
}

DensityMatrix pure_state(const ComplexVector& psi, std::vector<int> dims) {
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) throw ValidationError("pure_state: zero vector");
  return DensityMatrix(outer(psi, psi) / norm2, std::move(dims));
}

DensityMatrix vacuum(const FockConfig& fock) { return pure_state(fock_vector(0, fock), {fock.cutoff}); }

DensityMatrix coherent_state(Complex alpha, const FockConfig& fock) {
  return pure_state(coherent_vector(alpha, fock), {fock.cutoff});
}

DensityMatrix cat_hybrid(Complex alpha, const FockConfig& fock) {
  const ComplexVector plus = coherent_vector(alpha, fock);
  const ComplexVector minus = coherent_vector(-alpha, fock);
  const ComplexVector psi = (joint(0, plus) + joint(1, minus)) / std::sqrt(2.0);
  return pure_state(psi, {2, fock.cutoff});
}

DensityMatrix decohered_cat(const CatStateParams& p) {
  const Complex damped = p.damped_alpha();
  const ComplexVector plus = coherent_vector(damped, p.fock);
  const ComplexVector minus = coherent_vector(-damped, p.fock);
  // Ordered basis {|0,a'>, |0,-a'>, |1,a'>, |1,-a'>}.
  const ComplexVector e0p = joint(0, plus);
  const ComplexVector e0m = joint(0, minus);
  const ComplexVector e1p = joint(1, plus);
  const ComplexVector e1m = joint(1, minus);
  const double a = p.qubit_decay();
  const double b = p.coherence();
  ComplexMatrix m = (1.0 + a) * (outer(e0p, e0p) + outer(e1m, e1m)) +
                    (1.0 - a) * (outer(e0m, e0m) + outer(e1p, e1p)) +
                    (2.0 * b) * (outer(e0p, e1m) + outer(e1m, e0p));
  m *= 0.25;
  return DensityMatrix(std::move(m), {2, p.fock.cutoff});
}

}  // namespace hw
