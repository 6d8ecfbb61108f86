#include "hw/figures.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hw/error.hpp"
#include "hw/negativity.hpp"
#include "hw/states.hpp"
#include "hw/wigner.hpp"

namespace hw {

namespace {

constexpr double kAlphaMax = 2.5;

void require_points(int points) {
  if (points < 2) throw ValidationError("figure: --points must be at least 2");
}

std::string grid_echo(const GridSpec& g, double radius) {
  std::ostringstream os;
  os << "n_phi=" << g.n_phi << " n_theta=" << g.n_theta << " n_beta=" << g.n_beta
     << " beta_radius=" << format_number(radius);
  return os.str();
}

Table figure1(const FigureOptions& o) {
  const AngularGrid grid = build_angular_grid(o.grid.n_phi, o.grid.n_theta);
  Table t;
  t.config = "figure=1 points=" + std::to_string(o.points) + " n_phi=" + std::to_string(o.grid.n_phi) +
             " n_theta=" + std::to_string(o.grid.n_theta) + " a_min=0 a_max=1";
  t.columns = {"a", "nv_closed", "nv_numeric", "nv_pure_line"};
  for (double a : linspace(0.0, 1.0, o.points)) {
    t.rows.push_back({a, nv_diagonal_closed(a), nv_reduced_qubit(diagonal_qubit(a), grid), kPureQubitNv});
  }
  return t;
}

Table figure2(const FigureOptions& o) {
  Table t;
  t.config = "figure=2 points=" + std::to_string(o.points) + " purity_min=0.5 purity_max=1";
  t.columns = {"purity", "nv"};
  for (double p : linspace(0.5, 1.0, o.points)) t.rows.push_back({p, nv_from_purity(p)});
  return t;
}

Table figure3(const FigureOptions& o) {
  const FockConfig fock = o.fock_cutoff ? FockConfig(*o.fock_cutoff) : default_fock(kAlphaMax);
  const double radius = o.grid.beta_radius.value_or(default_beta_radius(kAlphaMax));
  const QuadratureGrid grid = build_grid(o.grid.n_phi, o.grid.n_theta, o.grid.n_beta, radius);
  Table t;
  t.config = "figure=3 points=" + std::to_string(o.points) + " " + grid_echo(o.grid, radius) +
             " fock_cutoff=" + std::to_string(fock.cutoff) + " alpha_min=0 alpha_max=2.5";
  t.columns = {"alpha_abs", "nv_total", "nv_reduced_qubit", "ent_negativity", "v_critical"};
  for (double a : linspace(0.0, kAlphaMax, o.points)) {
    const DensityMatrix rho = cat_hybrid(a, fock);
    const NvResult nv = negativity_volume_single(WignerEvaluator(rho), grid);
    const double nv_q = nv_reduced_qubit(partial_trace(rho, Subsystem::Qubit), grid.angular);
    t.rows.push_back({a, nv.nv, nv_q, entanglement_negativity(rho), v_critical_classical()});
  }
  return t;
}

Table damping_figure(int n, const FigureOptions& o) {
  const bool qubit_sweep = n == 4;
  const FockConfig fock = o.fock_cutoff ? FockConfig(*o.fock_cutoff) : default_fock(std::abs(o.alpha));
  const double radius = o.grid.beta_radius.value_or(default_beta_radius(std::abs(o.alpha)));
  const QuadratureGrid grid = build_grid(o.grid.n_phi, o.grid.n_theta, o.grid.n_beta, radius);
  Table t;
  std::ostringstream cfg;
  cfg << "figure=" << n << " points=" << o.points << " " << grid_echo(o.grid, radius)
      << " fock_cutoff=" << fock.cutoff << " alpha=" << format_number(o.alpha);
  if (qubit_sweep) {
    cfg << " gamma_t=" << format_number(o.gamma_t) << " kappa_t_min=0 kappa_t_max=0.8";
  } else {
    cfg << " kappa_t=" << format_number(o.kappa_t) << " gamma_t_min=0 gamma_t_max=3";
  }
  t.config = cfg.str();
  t.columns = {"damping", "nv_total", "ent_negativity_closed", "ent_negativity_pt", "v_critical"};
  for (double d : linspace(0.0, qubit_sweep ? 0.8 : 3.0, o.points)) {
    const CatStateParams p(o.alpha, qubit_sweep ? d : o.kappa_t, qubit_sweep ? o.gamma_t : d, fock);
    const DensityMatrix rho = decohered_cat(p);
    const NvResult nv = negativity_volume_single(WignerEvaluator(rho), grid);
    t.rows.push_back({d, nv.nv, decohered_negativity_closed(p), entanglement_negativity(rho), v_critical_classical()});
  }
  return t;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) {
    out[i] = i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
  }
  return out;
}

Table figure_table(int n, const FigureOptions& options) {
  require_points(options.points);
  switch (n) {
    case 1:
      return figure1(options);
    case 2:
      return figure2(options);
    case 3:
      return figure3(options);
    case 4:
    case 5:
      return damping_figure(n, options);
    default:
      throw ValidationError("figure: n must be between 1 and 5, got " + std::to_string(n));
  }
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out = "# config: " + table.config + "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace hw
