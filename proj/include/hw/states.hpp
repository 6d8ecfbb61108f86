#pragma once

// Qubit, bosonic, hybrid and decohered states. Qubit convention: |0> = (1,0),
// sigma_z|0> = +|0>. Coherent states are built from their Fock series and
// renormalized after truncation, so truncation shows up as a measured norm
// deficit rather than as a broken unit trace.

#include <complex>

#include "hw/linalg.hpp"

namespace hw {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// Fock levels 0..cutoff-1.
struct FockConfig {
  int cutoff = 24;

  explicit FockConfig(int n);
};

/// max(24, ceil((|alpha| + 4)^2)).
FockConfig default_fock(double alpha_abs);

/// Qubit-cat state family under qubit damping (kappa_t) and field damping
/// (gamma_t), both dimensionless products rate * time.
struct CatStateParams {
  Complex alpha;
  double kappa_t = 0.0;
  double gamma_t = 0.0;
  FockConfig fock;

  CatStateParams(Complex alpha, double kappa_t, double gamma_t, FockConfig fock);
  CatStateParams(Complex alpha, double kappa_t, double gamma_t);

  /// e^{-4 kappa t}
  double qubit_decay() const;
  /// e^{-4 kappa t} e^{-2|alpha|^2 (1 - e^{-gamma t})}
  double coherence() const;
  /// alpha e^{-gamma t / 2}
  Complex damped_alpha() const;
  /// N_+(t) and N_-(t) = 2 +- 2 exp(-2 |alpha|^2 e^{-gamma t}).
  double norm_plus() const;
  double norm_minus() const;
};

DensityMatrix pure_qubit(double a, double chi);
DensityMatrix diagonal_qubit(double a);
DensityMatrix bloch_qubit(const BlochVector& v);
DensityMatrix maximally_mixed_qubit();

/// Bloch vector of a single-qubit state.
BlochVector bloch_vector(const DensityMatrix& rho_q);

double purity(const DensityMatrix& rho);

/// Truncated, renormalized Fock amplitudes of |alpha>. Throws ValidationError
/// when the truncated norm falls below 1 - 1e-10.
ComplexVector coherent_vector(Complex alpha, const FockConfig& fock);

/// (|alpha> + sign |-alpha>) normalized; sign is +1 (even) or -1 (odd).
ComplexVector even_odd_cat(Complex alpha, int sign, const FockConfig& fock);

ComplexVector fock_vector(int n, const FockConfig& fock);

/// |psi><psi| / <psi|psi> with the given subsystem dimensions.
DensityMatrix pure_state(const ComplexVector& psi, std::vector<int> dims);

DensityMatrix vacuum(const FockConfig& fock);
DensityMatrix coherent_state(Complex alpha, const FockConfig& fock);

/// Projector onto (|0>|alpha> + |1>|-alpha>) / sqrt(2).
DensityMatrix cat_hybrid(Complex alpha, const FockConfig& fock);

/// Analytic solution of the depolarizing-qubit plus lossy-field master
/// equation started from cat_hybrid(alpha).
DensityMatrix decohered_cat(const CatStateParams& p);

}  // namespace hw
