#include "hw/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "hw/error.hpp"

namespace hw {

namespace {

double stiffness(const LindbladConfig& cfg) { return std::max(cfg.kappa, cfg.gamma * cfg.fock.cutoff); }

}  // namespace

LindbladConfig LindbladConfig::for_products(double kappa_t, double gamma_t, FockConfig fock) {
  LindbladConfig cfg;
  cfg.kappa = kappa_t;
  cfg.gamma = gamma_t;
  cfg.t_final = 1.0;
  cfg.fock = fock;
  const double s = stiffness(cfg);
  cfg.dt = s > 0.0 ? std::min(0.01, 0.01 / s) : 0.01;
  return cfg;
}

void LindbladConfig::validate() const {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!finite_nonneg(kappa) || !finite_nonneg(gamma)) {
    throw ValidationError("LindbladConfig: rates must be finite and nonnegative");
  }
  if (!finite_nonneg(t_final)) throw ValidationError("LindbladConfig: t_final must be finite and nonnegative");
  if (!(std::isfinite(dt) && dt > 0.0)) throw ValidationError("LindbladConfig: dt must be positive");
  const double s = stiffness(*this);
  if (s > 0.0 && dt > 0.01 / s) {
    std::ostringstream os;
    os << "LindbladConfig: dt = " << dt << " violates the stability bound dt <= 0.01 / " << s;
    throw ValidationError(os.str());
  }
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const LindbladConfig& cfg) {
  const int n = cfg.fock.cutoff;
  if (rho.rows() != 2 * n || rho.cols() != 2 * n) {
    std::ostringstream os;
    os << "lindblad_rhs: state is " << rho.rows() << "x" << rho.cols() << ", expected " << 2 * n;
    throw ValidationError(os.str());
  }
  ComplexMatrix out(2 * n, 2 * n);
  const auto p00 = rho.block(0, 0, n, n);
  const auto p11 = rho.block(n, n, n, n);
  const double k = cfg.kappa;
  out.block(0, 0, n, n) = (2.0 * k) * (p11 - p00);
  out.block(n, n, n, n) = (2.0 * k) * (p00 - p11);
  out.block(0, n, n, n) = (-4.0 * k) * rho.block(0, n, n, n);
  out.block(n, 0, n, n) = (-4.0 * k) * rho.block(n, 0, n, n);
  if (cfg.gamma == 0.0) return out;

  std::vector<double> root(n + 1);
  for (int j = 0; j <= n; ++j) root[j] = std::sqrt(static_cast<double>(j));
  const double g = cfg.gamma;
  for (int bi = 0; bi < 2; ++bi) {
    for (int bj = 0; bj < 2; ++bj) {
      const int r0 = bi * n, c0 = bj * n;
      for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
          Complex v = -0.5 * (r + c) * rho(r0 + r, c0 + c);
          if (r + 1 < n && c + 1 < n) v += root[r + 1] * root[c + 1] * rho(r0 + r + 1, c0 + c + 1);
          out(r0 + r, c0 + c) += g * v;
        }
      }
    }
  }
  return out;
}

ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const LindbladConfig& cfg) {
  if (!rho.is_bipartite()) throw ValidationError("lindblad_rhs: expected a qubit-boson state");
  return lindblad_rhs(rho.matrix(), cfg);
}

DensityMatrix evolve(const DensityMatrix& rho0, const LindbladConfig& cfg, const LindbladObserver& observer) {
  cfg.validate();
  if (!rho0.is_bipartite() || rho0.fock_dim() != cfg.fock.cutoff) {
    throw ValidationError("evolve: state dimensions do not match the configured Fock cutoff");
  }
  const long steps = cfg.t_final > 0.0 ? static_cast<long>(std::ceil(cfg.t_final / cfg.dt)) : 0;
  const double h = steps > 0 ? cfg.t_final / static_cast<double>(steps) : 0.0;
  ComplexMatrix rho = rho0.matrix();
  if (observer) observer(0.0, rho);
  for (long s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = lindblad_rhs(rho, cfg);
    const ComplexMatrix k2 = lindblad_rhs(rho + (0.5 * h) * k1, cfg);
    const ComplexMatrix k3 = lindblad_rhs(rho + (0.5 * h) * k2, cfg);
    const ComplexMatrix k4 = lindblad_rhs(rho + h * k3, cfg);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const double drift = std::abs(rho.trace() - 1.0);
    if (drift > kTolerances.lindblad_trace_drift) {
      std::ostringstream os;
      os << "evolve: trace drift " << drift << " at step " << s + 1;
      throw NumericalError(os.str());
    }
    if (observer) observer((s + 1) * h, rho);
  }
  return DensityMatrix(std::move(rho), rho0.dims());
}

}  // namespace hw
