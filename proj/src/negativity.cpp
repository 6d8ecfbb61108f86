#include "hw/negativity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hw/error.hpp"
#include "hw/parallel.hpp"
#include "hw/simd/angular.hpp"

namespace hw {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

simd::AngularNodes view(const AngularGrid& g) {
  return {g.nx.data(), g.ny.data(), g.nz.data(), g.w.data(), g.w.size()};
}

simd::Affine to_simd(const QubitAffine& c) { return {c.c0, c.cx, c.cy, c.cz}; }

double angular_integral(const QubitAffine& c, const AngularGrid& g) {
  return ((c.c0 * g.moment0 + c.cx * g.moment_x) + c.cy * g.moment_y) + c.cz * g.moment_z;
}

void check_drift(double normalization, const char* what) {
  if (!(std::abs(normalization - 1.0) <= kTolerances.normalization_drift)) {
    std::ostringstream os;
    os << what << ": int W dOmega = " << normalization
       << " drifts from 1; increase the Fock cutoff or the beta radius";
    throw NumericalError(os.str());
  }
}

}  // namespace

NvResult negativity_volume_single(const WignerEvaluator& ev, const QuadratureGrid& grid) {
  const AngularGrid& ang = grid.angular;
  const BetaGrid& bg = grid.beta;
  const simd::AngularNodes nodes = view(ang);
  const std::size_t n = bg.nodes.size();
  std::vector<double> negative(n), signed_sum(n);
  parallel_for(n, [&](std::size_t b) {
    const QubitAffine c = ev.coefficients(bg.nodes[b]);
    negative[b] = bg.weights[b] * simd::negative_part(nodes, to_simd(c), kTolerances.wigner_noise_floor);
    signed_sum[b] = bg.weights[b] * angular_integral(c, ang);
  });
  NvResult r;
  r.nv = -pairwise_sum(negative);
  r.normalization = pairwise_sum(signed_sum);
  check_drift(r.normalization, "negativity_volume");
  return r;
}

NvResult negativity_volume(const WignerEvaluator& ev, const QuadratureGrid& grid) {
  NvResult base = negativity_volume_single(ev, grid);
  const NvResult fine = negativity_volume_single(ev, doubled(grid));
  base.error_estimate = std::abs(fine.nv - base.nv);
  return base;
}

double wigner_normalization(const WignerEvaluator& ev, const QuadratureGrid& grid) {
  const BetaGrid& bg = grid.beta;
  std::vector<double> terms(bg.nodes.size());
  parallel_for(bg.nodes.size(), [&](std::size_t b) {
    terms[b] = bg.weights[b] * angular_integral(ev.coefficients(bg.nodes[b]), grid.angular);
  });
  return pairwise_sum(terms);
}

double nv_reduced_qubit(const DensityMatrix& rho_q, const AngularGrid& grid) {
  const QubitAffine c = qubit_affine(rho_q);
  return -simd::negative_part(view(grid), to_simd(c), kTolerances.wigner_noise_floor);
}

double nv_reduced_bosonic(const DensityMatrix& rho_b, const BetaGrid& grid) {
  const BosonicWigner w(rho_b);
  const std::size_t n = grid.nodes.size();
  std::vector<double> negative(n), signed_sum(n);
  parallel_for(n, [&](std::size_t k) {
    const double v = w(grid.nodes[k]);
    signed_sum[k] = grid.weights[k] * v;
    negative[k] = v < -kTolerances.wigner_noise_floor ? grid.weights[k] * v : 0.0;
  });
  check_drift(pairwise_sum(signed_sum), "nv_reduced_bosonic");
  return -pairwise_sum(negative);
}

double nv_diagonal_closed(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("nv_diagonal_closed: a outside [0, 1]");
  const double edge = 0.5 / kSqrt3;
  const double q = 3.0 * a * a - 3.0 * a + 1.0;
  if (a < 0.5 - edge) return std::max(0.0, q / (kSqrt3 * (1.0 - 2.0 * a)) - 0.5);
  if (a > 0.5 + edge) return std::max(0.0, q / (kSqrt3 * (2.0 * a - 1.0)) - 0.5);
  return 0.0;
}

double nv_from_purity(double purity) {
  if (!(purity >= 0.5 && purity <= 1.0)) throw ValidationError("nv_from_purity: purity outside [1/2, 1]");
  if (purity <= 2.0 / 3.0) return 0.0;
  return std::max(0.0, (3.0 * purity - 1.0) / (2.0 * kSqrt3 * std::sqrt(2.0 * purity - 1.0)) - 0.5);
}

double nv_product_pure(double v_bosonic) {
  if (!(v_bosonic >= 0.0)) throw ValidationError("nv_product_pure: bosonic NV must be nonnegative");
  return 2.0 / kSqrt3 * v_bosonic + kPureQubitNv;
}

void validate_mixture(const std::vector<MixtureComponent>& components) {
  if (components.empty()) throw ValidationError("mixture: no components");
  double total = 0.0;
  const int n = components.front().boson.dim();
  for (const MixtureComponent& c : components) {
    if (!(c.weight > 0.0 && c.weight <= 1.0)) throw ValidationError("mixture: weights must lie in (0, 1]");
    if (c.qubit.dims().size() != 1 || c.qubit.dim() != 2) {
      throw ValidationError("mixture: qubit component is not a single qubit");
    }
    if (c.boson.dims().size() != 1 || c.boson.dim() != n) {
      throw ValidationError("mixture: bosonic components must share one Fock dimension");
    }
    total += c.weight;
  }
  if (std::abs(total - 1.0) > kTolerances.weight_sum) {
    std::ostringstream os;
    os << "mixture: weights sum to " << total << ", not 1";
    throw ValidationError(os.str());
  }
}

DensityMatrix mixture_state(const std::vector<MixtureComponent>& components) {
  validate_mixture(components);
  const int n = components.front().boson.dim();
  ComplexMatrix m = ComplexMatrix::Zero(2 * n, 2 * n);
  for (const MixtureComponent& c : components) m += c.weight * tensor(c.qubit.matrix(), c.boson.matrix());
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m), {2, n});
}

double v_critical(const std::vector<MixtureComponent>& components, const BetaGrid& grid) {
  validate_mixture(components);
  std::vector<double> weights, nvs;
  for (const MixtureComponent& c : components) {
    weights.push_back(c.weight);
    nvs.push_back(nv_reduced_bosonic(c.boson, grid));
  }
  return v_critical(weights, nvs);
}

double v_critical(const std::vector<double>& weights, const std::vector<double>& bosonic_nvs) {
  if (weights.empty() || weights.size() != bosonic_nvs.size()) {
    throw ValidationError("v_critical: need one bosonic NV per weight");
  }
  double total = 0.0, mean = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0 && weights[i] <= 1.0)) throw ValidationError("v_critical: weights must lie in (0, 1]");
    if (!(bosonic_nvs[i] >= 0.0)) throw ValidationError("v_critical: bosonic NV must be nonnegative");
    total += weights[i];
    mean += weights[i] * bosonic_nvs[i];
  }
  if (std::abs(total - 1.0) > kTolerances.weight_sum) throw ValidationError("v_critical: weights must sum to 1");
  return 2.0 / kSqrt3 * mean + kPureQubitNv;
}

double v_critical_classical() { return kPureQubitNv; }

std::string verdict_name(Verdict v) { return v == Verdict::Entangled ? "Entangled" : "Inconclusive"; }

WitnessReport make_report(const NvResult& nv, double v_cr) {
  WitnessReport r;
  r.nv = nv.nv;
  r.v_critical = v_cr;
  r.quadrature_error_estimate = nv.error_estimate;
  r.verdict = nv.nv > v_cr + nv.error_estimate ? Verdict::Entangled : Verdict::Inconclusive;
  return r;
}

WitnessReport witness(const WignerEvaluator& ev, const QuadratureGrid& grid, double v_cr) {
  return make_report(negativity_volume(ev, grid), v_cr);
}

double entanglement_negativity(const DensityMatrix& rho) {
  ComplexMatrix pt = partial_transpose_qubit(rho);
  pt = 0.5 * (pt + pt.adjoint()).eval();
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(pt)) {
    if (ev < 0.0) sum -= ev;
  }
  return sum;
}

double cat_negativity_closed(Complex alpha) {
  return 0.5 * std::sqrt(-std::expm1(-4.0 * std::norm(alpha)));
}

double decohered_negativity_closed(const CatStateParams& params) {
  const double a = params.qubit_decay();
  const double b = params.coherence();
  const double np = params.norm_plus();
  const double nm = params.norm_minus();
  const double d = np - nm;
  const double radicand = 16.0 * b * b + d * d * (1.0 - 2.0 * b) + 4.0 * a * (a + 2.0 * b) * np * nm;
  const double value = (std::sqrt(std::max(radicand, 0.0)) + 4.0 * (b - 1.0)) / 16.0;
  return std::max(value, 0.0);
}

double qubit_damping_threshold() { return 0.25 * std::log(3.0); }

double nv_damping_threshold(Complex alpha) { return 0.5 * std::norm(alpha) + 0.125 * std::log(3.0); }

}  // namespace hw
