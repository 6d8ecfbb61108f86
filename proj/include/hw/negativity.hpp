#pragma once

// Negativity volume NV = 1/2 (int |W| dOmega - 1), its closed forms for qubit
// states, the separability bound V_cr and the witness verdict built on it, and
// the entanglement negativity of the partial transpose.
//
// Quadrature evaluates NV as -sum w W [W < -floor], i.e. 1/2 sum w (|W| - W)
// with values within the noise floor treated as nonnegative. This form is
// nonnegative by construction and does not assume the discrete normalization
// is exactly 1; that normalization is checked separately.

#include <string>
#include <vector>

#include "hw/linalg.hpp"
#include "hw/quadrature.hpp"
#include "hw/states.hpp"
#include "hw/wigner.hpp"

namespace hw {

/// 1/sqrt(3) - 1/2, the NV of every pure qubit and of separable states with
/// classical bosonic parts.
inline constexpr double kPureQubitNv = 0.57735026918962576 - 0.5;

struct NvResult {
  double nv = 0.0;
  double error_estimate = 0.0;  // |NV(doubled grid) - NV(grid)|
  double normalization = 0.0;   // int W dOmega on the base grid
};

/// NV on one grid without the doubling estimate. Throws NumericalError when
/// |int W dOmega - 1| exceeds kTolerances.normalization_drift.
NvResult negativity_volume_single(const WignerEvaluator& ev, const QuadratureGrid& grid);

/// NV on the grid plus the grid-doubling error estimate.
NvResult negativity_volume(const WignerEvaluator& ev, const QuadratureGrid& grid);

/// int W dOmega on the grid.
double wigner_normalization(const WignerEvaluator& ev, const QuadratureGrid& grid);

/// NV of a qubit state over the angular measure dnu.
double nv_reduced_qubit(const DensityMatrix& rho_q, const AngularGrid& grid);
/// NV of a bosonic state over d^2 beta.
double nv_reduced_bosonic(const DensityMatrix& rho_b, const BetaGrid& grid);

/// Piecewise NV of diag(a, 1 - a); zero on [1/2 - 1/(2 sqrt3), 1/2 + 1/(2 sqrt3)].
double nv_diagonal_closed(double a);

/// NV of a diagonal qubit as a function of its purity P in [1/2, 1].
double nv_from_purity(double purity);

/// NV of a pure qubit times a bosonic state with NV v_b:
/// (2/sqrt3) v_b + 1/sqrt3 - 1/2.
double nv_product_pure(double v_bosonic);

struct MixtureComponent {
  double weight;
  DensityMatrix qubit;
  DensityMatrix boson;
};

/// Throws ValidationError unless weights lie in (0, 1] and sum to 1 within
/// kTolerances.weight_sum, and every component has one qubit and one mode of
/// a common dimension.
void validate_mixture(const std::vector<MixtureComponent>& components);

/// sum p_i rho_i^q (x) rho_i^b.
DensityMatrix mixture_state(const std::vector<MixtureComponent>& components);

/// (2/sqrt3) sum p_i NV(rho_i^b) + 1/sqrt3 - 1/2, each NV by quadrature.
double v_critical(const std::vector<MixtureComponent>& components, const BetaGrid& grid);

/// Same bound from weights and bosonic NVs supplied by the caller.
double v_critical(const std::vector<double>& weights, const std::vector<double>& bosonic_nvs);

/// Bound when every bosonic component is classical (NV = 0).
double v_critical_classical();

enum class Verdict { Entangled, Inconclusive };
std::string verdict_name(Verdict v);

struct WitnessReport {
  double nv = 0.0;
  double v_critical = 0.0;
  double quadrature_error_estimate = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// Entangled iff nv > v_cr + error estimate. Never claims separability.
WitnessReport witness(const WignerEvaluator& ev, const QuadratureGrid& grid, double v_cr);
WitnessReport make_report(const NvResult& nv, double v_cr);

/// Sum of |negative eigenvalues| of the partial transpose.
double entanglement_negativity(const DensityMatrix& rho);

/// 1/2 sqrt(1 - e^{-4|alpha|^2}).
double cat_negativity_closed(Complex alpha);

/// Negativity of the decohered cat from A, B and N_+-(t), floored at 0.
double decohered_negativity_closed(const CatStateParams& params);

/// kappa t below which the decohered cat (gamma = 0) stays entangled: ln3 / 4.
double qubit_damping_threshold();
/// kappa t below which W keeps negative values (gamma = 0): |alpha|^2/2 + ln3/8.
double nv_damping_threshold(Complex alpha);

}  // namespace hw
