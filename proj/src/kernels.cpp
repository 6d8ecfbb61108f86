#include "hw/kernels.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "hw/error.hpp"

namespace hw {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

ComplexMatrix parity(int n) {
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
  return p;
}

// a^dagger beta - a beta^* on the truncated space.
ComplexMatrix displacement_generator(Complex beta, int n) {
  const ComplexMatrix a = annihilation(n);
  return beta * a.adjoint() - std::conj(beta) * a;
}

void require_fits(Complex beta, const FockConfig& fock) {
  if (!kernel_fits_cutoff(beta, fock)) {
    std::ostringstream os;
    os << "bosonic_kernel: Fock cutoff " << fock.cutoff << " is too small for |2 beta| = "
       << 2.0 * std::abs(beta);
    throw ValidationError(os.str());
  }
}

}  // namespace

PhasePoint PhasePoint::make(double phi, double theta, Complex beta) {
  if (!std::isfinite(phi) || !std::isfinite(theta) || !std::isfinite(beta.real()) ||
      !std::isfinite(beta.imag())) {
    throw ValidationError("PhasePoint: coordinates must be finite");
  }
  if (theta < 0.0 || theta > 0.5 * std::numbers::pi) {
    throw ValidationError("PhasePoint: theta must lie in [0, pi/2]");
  }
  double reduced = std::fmod(phi, 2.0 * std::numbers::pi);
  if (reduced < 0.0) reduced += 2.0 * std::numbers::pi;
  return {reduced, theta, beta};
}

Axis3 qubit_kernel_axis(double phi, double theta) {
  const double s = std::sin(2.0 * theta);
  return {-s * std::cos(2.0 * phi), s * std::sin(2.0 * phi), std::cos(2.0 * theta)};
}

ComplexMatrix qubit_kernel(double phi, double theta, double gauge) {
  auto rz = [](double angle) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, angle);
    m(1, 1) = std::polar(1.0, -angle);
    return m;
  };
  // exp(i sigma_y theta) = cos(theta) I + i sin(theta) sigma_y.
  ComplexMatrix ry(2, 2);
  ry << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  const ComplexMatrix u = rz(phi) * ry * rz(gauge);
  ComplexMatrix parity_q = pauli::identity() - std::sqrt(3.0) * pauli::z();
  ComplexMatrix k = 0.5 * u * parity_q * u.adjoint();
  return 0.5 * (k + k.adjoint());
}

bool kernel_fits_cutoff(Complex beta, const FockConfig& fock) {
  // Poisson tail mass at and above the cutoff for mean |2 beta|^2, summed
  // directly since 1 - (kept mass) cannot resolve 1e-24.
  const double mean = 4.0 * std::norm(beta);
  if (mean == 0.0) return true;
  const int n = fock.cutoff;
  double term = std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
  double tail = 0.0;
  for (int k = n; term > 0.0 && k < n + 10000; ++k) {
    tail += term;
    if (k > mean && term < 1e-40 * tail) break;
    term *= mean / (k + 1);
  }
  return tail <= kTolerances.kernel_tail;
}

ComplexMatrix bosonic_kernel(Complex beta, const FockConfig& fock) {
  require_fits(beta, fock);
  const int n = fock.cutoff;
  const ComplexMatrix d = unitary_exp(displacement_generator(beta, n));
  ComplexMatrix k = kTwoOverPi * d * parity(n) * d.adjoint();
  return 0.5 * (k + k.adjoint());
}

ComplexMatrix bosonic_kernel_via_double_displacement(Complex beta, const FockConfig& fock) {
  require_fits(beta, fock);
  const int n = fock.cutoff;
  const ComplexMatrix d2 = unitary_exp(displacement_generator(2.0 * beta, n));
  ComplexMatrix k = kTwoOverPi * d2 * parity(n);
  return 0.5 * (k + k.adjoint());
}

LaguerreTable::LaguerreTable(int n_levels) : n_(n_levels) {
  if (n_levels < 1) throw ValidationError("LaguerreTable: need at least one Fock level");
  offset_.resize(n_);
  std::size_t total = 0;
  for (int k = 0; k < n_; ++k) {
    offset_[k] = total;
    total += static_cast<std::size_t>(n_ - k);
  }
  a_.assign(total, 0.0);
  b_.assign(total, 0.0);
  c_.assign(total, 0.0);
  for (int k = 0; k < n_; ++k) {
    for (int m = 2; m < n_ - k; ++m) {
      const double mm = m, kk = k;
      const double denom = std::sqrt(mm * (mm + kk));
      a_[offset_[k] + m] = (2.0 * mm - 1.0 + kk) / denom;
      b_[offset_[k] + m] = 1.0 / denom;
      c_[offset_[k] + m] = std::sqrt((mm - 1.0) * (mm - 1.0 + kk)) / denom;
    }
  }
  inv_sqrt_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
  for (int k = 1; k <= n_; ++k) inv_sqrt_[k] = 1.0 / std::sqrt(static_cast<double>(k));
}

ComplexMatrix bosonic_kernel_exact(Complex beta, int n_levels) {
  if (!(std::abs(beta) <= kMaxKernelBeta)) {
    std::ostringstream os;
    os << "bosonic_kernel_exact: |beta| = " << std::abs(beta) << " exceeds " << kMaxKernelBeta;
    throw ValidationError(os.str());
  }
  const LaguerreTable table(n_levels);
  std::vector<double> scratch(n_levels);
  ComplexMatrix out(n_levels, n_levels);
  table.for_each_diagonal(beta, scratch, [&](int k, Complex pref, const std::vector<double>& f) {
    for (int m = 0; m + k < n_levels; ++m) {
      const Complex q = pref * ((m % 2 == 0) ? f[m] : -f[m]);
      out(m + k, m) = q;
      out(m, m + k) = std::conj(q);
    }
  });
  for (int k = 0; k < n_levels; ++k) out(k, k) = out(k, k).real();
  return out;
}

ComplexMatrix hybrid_kernel(const PhasePoint& p, const FockConfig& fock) {
  return tensor(qubit_kernel(p.phi, p.theta), bosonic_kernel(p.beta, fock));
}

std::shared_ptr<const ComplexMatrix> BosonicKernelCache::get(Complex beta, const FockConfig& fock) {
  const Key key{{std::bit_cast<std::uint64_t>(beta.real()), std::bit_cast<std::uint64_t>(beta.imag())},
                fock.cutoff};
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto value = std::make_shared<const ComplexMatrix>(bosonic_kernel(beta, fock));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(key, std::move(value));
  return it->second;
}

std::size_t BosonicKernelCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace hw
