#pragma once

// Sweep tables behind the five figures, and the CSV writer shared with the
// CLI. Numbers are printed with 12 significant digits and '\n' line endings;
// the first line is a "# config: ..." echo of every effective parameter.

#include <optional>
#include <string>
#include <vector>

#include "hw/quadrature.hpp"

namespace hw {

struct GridSpec {
  int n_phi = kDefaultNPhi;
  int n_theta = kDefaultNTheta;
  int n_beta = kDefaultNBeta;
  std::optional<double> beta_radius;  // default: |alpha|_max + 4
};

struct FigureOptions {
  int points = 101;
  GridSpec grid;
  std::optional<int> fock_cutoff;  // default: default_fock(|alpha|_max)
  double alpha = 1.0;              // figures 4 and 5
  double kappa_t = 0.0;            // held fixed in figure 5
  double gamma_t = 0.0;            // held fixed in figure 4
};

struct Table {
  std::string config;  // without the "# config: " prefix
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Sweep ranges: a in [0, 1], P in [1/2, 1], |alpha| in [0, 2.5],
/// kappa t in [0, 0.8], gamma t in [0, 3].
///   1: a, nv_closed, nv_numeric, nv_pure_line
///   2: purity, nv
///   3: alpha_abs, nv_total, nv_reduced_qubit, ent_negativity, v_critical
///   4, 5: damping, nv_total, ent_negativity_closed, ent_negativity_pt, v_critical
Table figure_table(int n, const FigureOptions& options);

/// %.12g with negative zero printed as 0.
std::string format_number(double v);

std::string to_csv(const Table& table);

/// `points` uniform samples on [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, int points);

}  // namespace hw
