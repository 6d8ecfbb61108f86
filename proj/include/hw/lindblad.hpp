#pragma once

// Fixed-step RK4 integrator for the qubit-depolarizing plus lossy-field
// master equation
//
//   d rho/dt = kappa sum_i (sigma_i rho sigma_i - rho)
//            + gamma (a rho a^dagger - 1/2 {a^dagger a, rho}),
//
// at zero temperature. The qubit term equals kappa (2 I (x) Tr_q rho - 4 rho);
// both terms are applied block by block on the 2x2 bosonic block view.

#include <functional>

#include "hw/linalg.hpp"
#include "hw/states.hpp"

namespace hw {

struct LindbladConfig {
  double kappa = 0.0;    // qubit rate, 1/time
  double gamma = 0.0;    // field rate, 1/time
  double dt = 1e-3;      // step bound, time
  double t_final = 0.0;  // time
  FockConfig fock{24};

  /// Rates kappa_t and gamma_t over unit time, with the largest step the
  /// stability bound allows (and at most 0.01).
  static LindbladConfig for_products(double kappa_t, double gamma_t, FockConfig fock);

  /// Throws ValidationError on negative or non-finite values or when
  /// dt > 0.01 / max(kappa, gamma N).
  void validate() const;
};

/// Right-hand side of the master equation; traceless up to rounding.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const LindbladConfig& cfg);
ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const LindbladConfig& cfg);

using LindbladObserver = std::function<void(double t, const ComplexMatrix& rho)>;

/// rho(t_final) by RK4 with ceil(t_final / dt) equal steps. The state is
/// re-symmetrized after every step; a trace drift above 1e-8 throws
/// NumericalError. The observer, if given, sees every step including t = 0.
DensityMatrix evolve(const DensityMatrix& rho0, const LindbladConfig& cfg,
                     const LindbladObserver& observer = {});

}  // namespace hw
