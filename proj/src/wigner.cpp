#include "hw/wigner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hw/error.hpp"

namespace hw {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

using DiagonalSet = std::vector<std::vector<Complex>>;

void split_diagonals(const ComplexMatrix& b, DiagonalSet& upper, DiagonalSet& lower) {
  const int n = static_cast<int>(b.rows());
  upper.assign(n, {});
  lower.assign(n, {});
  for (int k = 0; k < n; ++k) {
    upper[k].resize(n - k);
    lower[k].resize(n - k);
    for (int m = 0; m + k < n; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      upper[k][m] = sign * b(m, m + k);
      lower[k][m] = sign * b(m + k, m);
    }
  }
}

// Tr[B Delta_b(beta)] from the per-diagonal kernel elements.
Complex kernel_trace(const DiagonalSet& upper, const DiagonalSet& lower, const LaguerreTable& table,
                     Complex beta, std::vector<double>& scratch) {
  Complex total = 0.0;
  table.for_each_diagonal(beta, scratch, [&](int k, Complex pref, const std::vector<double>& f) {
    const std::vector<Complex>& up = upper[k];
    Complex su = 0.0;
    for (std::size_t m = 0; m < up.size(); ++m) su += f[m] * up[m];
    total += pref * su;
    if (k > 0) {
      const std::vector<Complex>& lo = lower[k];
      Complex sl = 0.0;
      for (std::size_t m = 0; m < lo.size(); ++m) sl += f[m] * lo[m];
      total += std::conj(pref) * sl;
    }
  });
  return total;
}

void check_residue(double imag, const char* what) {
  if (std::abs(imag) > kTolerances.imaginary_residue) {
    std::ostringstream os;
    os << what << ": imaginary residue " << imag << " exceeds " << kTolerances.imaginary_residue;
    throw NumericalError(os.str());
  }
}

void require_beta(Complex beta) {
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
    throw ValidationError("Wigner evaluation: beta must be finite");
  }
}

}  // namespace

WignerEvaluator::WignerEvaluator(const DensityMatrix& rho)
    : n_(rho.is_bipartite() ? rho.fock_dim() : 0), table_(rho.is_bipartite() ? rho.fock_dim() : 1) {
  if (!rho.is_bipartite()) throw ValidationError("WignerEvaluator: expected a qubit-boson state");
  const ComplexMatrix& m = rho.matrix();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) blocks_[2 * i + j] = m.block(i * n_, j * n_, n_, n_);
  }
  split_diagonals(blocks_[0], diag_[0].upper, diag_[0].lower);
  split_diagonals(blocks_[3], diag_[1].upper, diag_[1].lower);
  split_diagonals(blocks_[1], diag_[2].upper, diag_[2].lower);
}

Complex WignerEvaluator::trace_with_kernel(const Diagonals& d, Complex beta, std::vector<double>& scratch) const {
  return kernel_trace(d.upper, d.lower, table_, beta, scratch);
}

QubitAffine WignerEvaluator::coefficients(Complex beta) const {
  require_beta(beta);
  std::vector<double> scratch(n_);
  const Complex t00 = trace_with_kernel(diag_[0], beta, scratch);
  const Complex t11 = trace_with_kernel(diag_[1], beta, scratch);
  const Complex t01 = trace_with_kernel(diag_[2], beta, scratch);
  check_residue(t00.imag(), "WignerEvaluator");
  check_residue(t11.imag(), "WignerEvaluator");
  QubitAffine c;
  c.c0 = 0.5 * (t00.real() + t11.real());
  c.cz = -0.5 * kSqrt3 * (t00.real() - t11.real());
  c.cx = -kSqrt3 * t01.real();
  c.cy = kSqrt3 * t01.imag();
  return c;
}

double WignerEvaluator::value(const PhasePoint& p) const {
  require_beta(p.beta);
  const ComplexMatrix dq = qubit_kernel(p.phi, p.theta);
  const ComplexMatrix db = bosonic_kernel_exact(p.beta, n_);
  Complex w = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      w += dq(j, i) * (block(i, j).cwiseProduct(db.transpose())).sum();
    }
  }
  check_residue(w.imag(), "wigner_value");
  return w.real();
}

double wigner_qubit(const DensityMatrix& rho_q, double phi, double theta) {
  if (rho_q.dims().size() != 1 || rho_q.dim() != 2) {
    throw ValidationError("wigner_qubit: expected a single-qubit state");
  }
  const Complex w = (rho_q.matrix() * qubit_kernel(phi, theta)).trace();
  check_residue(w.imag(), "wigner_qubit");
  return w.real();
}

QubitAffine qubit_affine(const DensityMatrix& rho_q) {
  const BlochVector b = bloch_vector(rho_q);
  return {0.5, -0.5 * kSqrt3 * b.x, -0.5 * kSqrt3 * b.y, -0.5 * kSqrt3 * b.z};
}

BosonicWigner::BosonicWigner(const DensityMatrix& rho_b) : n_(rho_b.dim()), table_(rho_b.dim()) {
  if (rho_b.dims().size() != 1) throw ValidationError("wigner_bosonic: expected a single bosonic mode");
  split_diagonals(rho_b.matrix(), upper_, lower_);
}

double BosonicWigner::operator()(Complex beta) const {
  require_beta(beta);
  std::vector<double> scratch(n_);
  const Complex w = kernel_trace(upper_, lower_, table_, beta, scratch);
  check_residue(w.imag(), "wigner_bosonic");
  return w.real();
}

double wigner_bosonic(const DensityMatrix& rho_b, Complex beta) { return BosonicWigner(rho_b)(beta); }

double closed_form_cat_wigner(Complex alpha, const PhasePoint& p) {
  const double inv_pi = 1.0 / std::numbers::pi;
  const double c2t = std::cos(2.0 * p.theta);
  const double s2t = std::sin(2.0 * p.theta);
  const double phase = p.phi + 2.0 * (p.beta * std::conj(alpha)).imag();
  return 0.5 * inv_pi * std::exp(-2.0 * std::norm(p.beta - alpha)) * (1.0 - kSqrt3 * c2t) +
         0.5 * inv_pi * std::exp(-2.0 * std::norm(p.beta + alpha)) * (1.0 + kSqrt3 * c2t) +
         kSqrt3 * inv_pi * std::exp(-2.0 * std::norm(p.beta)) * s2t * std::cos(2.0 * phase);
}

double closed_form_decohered_wigner(const CatStateParams& params, const PhasePoint& p) {
  const double inv_pi = 1.0 / std::numbers::pi;
  const Complex a = params.damped_alpha();
  const double qa = params.qubit_decay();
  const double b = params.coherence();
  const double c2t = std::cos(2.0 * p.theta);
  const double s2t = std::sin(2.0 * p.theta);
  const double phase = p.phi + 2.0 * (p.beta * std::conj(a)).imag();
  return 0.5 * inv_pi * std::exp(-2.0 * std::norm(p.beta - a)) * (1.0 - kSqrt3 * qa * c2t) +
         0.5 * inv_pi * std::exp(-2.0 * std::norm(p.beta + a)) * (1.0 + kSqrt3 * qa * c2t) +
         kSqrt3 * inv_pi * b * std::exp(-2.0 * std::norm(p.beta)) * s2t * std::cos(2.0 * phase);
}

double closed_form_pure_qubit_wigner(double a, double chi, double phi, double theta) {
  return kSqrt3 * std::sqrt(a * (1.0 - a)) * std::sin(2.0 * theta) * std::cos(chi + 2.0 * phi) +
         0.5 * kSqrt3 * (1.0 - 2.0 * a) * std::cos(2.0 * theta) + 0.5;
}

double closed_form_diagonal_qubit_wigner(double a, double theta) {
  return 0.5 * kSqrt3 * (1.0 - 2.0 * a) * std::cos(2.0 * theta) + 0.5;
}

}  // namespace hw
