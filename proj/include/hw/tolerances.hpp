#pragma once

namespace hw {

// Every numerical acceptance threshold used for validating states and
// operators lives here so there is exactly one place to tune them.
struct Tolerances {
  double hermiticity = 1e-12;        // max |M - M^dagger| entrywise
  double trace = 1e-10;              // |Tr rho - 1|
  double psd_floor = -1e-10;         // smallest admissible eigenvalue
  double unitarity = 1e-10;          // max |U^dagger U - I|
  double imaginary_residue = 1e-10;  // |Im W| before it is discarded
  double coherent_norm_loss = 1e-10; // truncated norm deficit of |alpha>
  double kernel_tail = 1e-24;        // Fock tail mass allowed for D(2 beta)|0>
  double normalization_drift = 1e-4; // |int W dOmega - 1| before NV aborts
  double wigner_noise_floor = 1e-12; // W values above -floor count as >= 0
  double weight_sum = 1e-12;         // mixture weights sum to one
  double lindblad_trace_drift = 1e-8;
};

inline constexpr Tolerances kTolerances{};

}  // namespace hw
