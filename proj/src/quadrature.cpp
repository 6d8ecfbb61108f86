#include "hw/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "hw/error.hpp"
#include "hw/kernels.hpp"
#include "hw/parallel.hpp"

namespace hw {

namespace {

void require_count(int n, const char* what) {
  if (n < 4) {
    std::ostringstream os;
    os << "build_grid: " << what << " = " << n << " must be at least 4";
    throw ValidationError(os.str());
  }
}

[[noreturn]] void non_finite(const char* where, double value, const std::string& node) {
  std::ostringstream os;
  os << where << ": integrand returned " << value << " at " << node;
  throw NumericalError(os.str());
}

std::string describe(double phi, double theta, Complex beta) {
  std::ostringstream os;
  os << "phi=" << phi << " theta=" << theta << " beta=" << beta.real() << (beta.imag() < 0 ? "" : "+")
     << beta.imag() << "i";
  return os.str();
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw ValidationError("gauss_legendre: need at least one node");
  // P_n(x) and P_n'(x) by the three-term recurrence.
  auto legendre = [n](double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

AngularGrid build_angular_grid(int n_phi, int n_theta) {
  require_count(n_phi, "n_phi");
  require_count(n_theta, "n_theta");
  AngularGrid g;
  g.n_phi = n_phi;
  g.n_theta = n_theta;
  const double two_pi = 2.0 * std::numbers::pi;
  for (int k = 0; k < n_phi; ++k) {
    g.phi.push_back(two_pi * k / n_phi);
    g.phi_weights.push_back(two_pi / n_phi);
  }
  const GaussLegendre gl = gauss_legendre(n_theta);
  const double half_span = 0.25 * std::numbers::pi;
  for (int k = 0; k < n_theta; ++k) {
    const double t = half_span * (gl.nodes[k] + 1.0);
    g.theta.push_back(t);
    g.theta_weights.push_back(gl.weights[k] * half_span * std::sin(2.0 * t) / std::numbers::pi);
  }
  g.node_count = static_cast<std::size_t>(n_phi) * n_theta;
  const std::size_t padded = (g.node_count + 3) / 4 * 4;
  g.nx.assign(padded, 0.0);
  g.ny.assign(padded, 0.0);
  g.nz.assign(padded, 0.0);
  g.w.assign(padded, 0.0);
  std::size_t idx = 0;
  for (int it = 0; it < n_theta; ++it) {
    for (int ip = 0; ip < n_phi; ++ip, ++idx) {
      const Axis3 n = qubit_kernel_axis(g.phi[ip], g.theta[it]);
      g.nx[idx] = n.x;
      g.ny[idx] = n.y;
      g.nz[idx] = n.z;
      g.w[idx] = g.phi_weights[ip] * g.theta_weights[it];
    }
  }
  std::vector<double> tmp(g.node_count);
  auto moment = [&](const std::vector<double>& a) {
    for (std::size_t i = 0; i < g.node_count; ++i) tmp[i] = g.w[i] * a[i];
    return pairwise_sum(tmp);
  };
  g.moment0 = pairwise_sum(std::span<const double>(g.w.data(), g.node_count));
  g.moment_x = moment(g.nx);
  g.moment_y = moment(g.ny);
  g.moment_z = moment(g.nz);
  return g;
}

BetaGrid build_beta_grid(int n_beta, double radius) {
  require_count(n_beta, "n_beta");
  if (!(std::isfinite(radius) && radius > 0.0)) {
    throw ValidationError("build_grid: beta radius must be finite and positive");
  }
  BetaGrid g;
  g.n_beta = n_beta;
  g.radius = radius;
  const GaussLegendre gl = gauss_legendre(n_beta);
  for (int k = 0; k < n_beta; ++k) {
    g.axis.push_back(radius * gl.nodes[k]);
    g.axis_weights.push_back(radius * gl.weights[k]);
  }
  g.nodes.reserve(static_cast<std::size_t>(n_beta) * n_beta);
  g.weights.reserve(static_cast<std::size_t>(n_beta) * n_beta);
  for (int iy = 0; iy < n_beta; ++iy) {
    for (int ix = 0; ix < n_beta; ++ix) {
      g.nodes.emplace_back(g.axis[ix], g.axis[iy]);
      g.weights.push_back(g.axis_weights[ix] * g.axis_weights[iy]);
    }
  }
  return g;
}

QuadratureGrid build_grid(int n_phi, int n_theta, int n_beta, double radius) {
  return {build_angular_grid(n_phi, n_theta), build_beta_grid(n_beta, radius)};
}

AngularGrid doubled(const AngularGrid& g) { return build_angular_grid(2 * g.n_phi, 2 * g.n_theta); }
BetaGrid doubled(const BetaGrid& g) { return build_beta_grid(2 * g.n_beta, g.radius); }
QuadratureGrid doubled(const QuadratureGrid& g) { return {doubled(g.angular), doubled(g.beta)}; }

double integrate(const std::function<double(const GridNode&)>& f, const QuadratureGrid& grid) {
  const AngularGrid& ang = grid.angular;
  const BetaGrid& bg = grid.beta;
  std::vector<double> rows(bg.nodes.size());
  parallel_for(bg.nodes.size(), [&](std::size_t b) {
    const Complex beta = bg.nodes[b];
    double s = 0.0;
    for (int it = 0; it < ang.n_theta; ++it) {
      for (int ip = 0; ip < ang.n_phi; ++ip) {
        const double v = f({ang.phi[ip], ang.theta[it], beta});
        if (!std::isfinite(v)) non_finite("integrate", v, describe(ang.phi[ip], ang.theta[it], beta));
        s += ang.phi_weights[ip] * ang.theta_weights[it] * v;
      }
    }
    rows[b] = bg.weights[b] * s;
  });
  return pairwise_sum(rows);
}

double integrate_angular(const std::function<double(double, double)>& f, const AngularGrid& grid) {
  std::vector<double> terms;
  terms.reserve(grid.node_count);
  for (int it = 0; it < grid.n_theta; ++it) {
    for (int ip = 0; ip < grid.n_phi; ++ip) {
      const double v = f(grid.phi[ip], grid.theta[it]);
      if (!std::isfinite(v)) non_finite("integrate_angular", v, describe(grid.phi[ip], grid.theta[it], 0.0));
      terms.push_back(grid.phi_weights[ip] * grid.theta_weights[it] * v);
    }
  }
  return pairwise_sum(terms);
}

double integrate_beta(const std::function<double(Complex)>& f, const BetaGrid& grid) {
  std::vector<double> terms(grid.nodes.size());
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    const double v = f(grid.nodes[k]);
    if (!std::isfinite(v)) non_finite("integrate_beta", v, describe(0.0, 0.0, grid.nodes[k]));
    terms[k] = grid.weights[k] * v;
  }
  return pairwise_sum(terms);
}

}  // namespace hw
