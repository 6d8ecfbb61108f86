#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hw/density_io.hpp"
#include "hw/error.hpp"
#include "hw/figures.hpp"
#include "hw/lindblad.hpp"
#include "hw/negativity.hpp"
#include "hw/quadrature.hpp"
#include "hw/states.hpp"
#include "hw/wigner.hpp"

namespace hw::cli {

namespace {

using Json = nlohmann::ordered_json;
using Params = std::vector<std::pair<std::string, std::string>>;

constexpr double kLindbladTolerance = 1e-4;

struct RunConfig {
  std::optional<double> alpha, alpha_re, alpha_im;
  double a = 1.0;
  double chi = 0.0;
  std::string bloch = "0,0,1";
  double kappa_t = 0.0;
  double gamma_t = 0.0;
  std::optional<int> fock_cutoff;
  int n_phi = kDefaultNPhi;
  int n_theta = kDefaultNTheta;
  int n_beta = kDefaultNBeta;
  std::optional<double> beta_radius;
  int points = 101;
  std::string output;
  std::string state = "cat";
  std::string boson = "vacuum";
  bool classical_bosonic = false;
  std::string bosonic_nv;
  int figure = 0;
  double phi = 0.0;
  double theta = 0.25 * std::numbers::pi;
  double beta_im = 0.0;

  Complex amplitude() const {
    if (alpha && alpha_re && *alpha != *alpha_re) {
      throw ValidationError("--alpha and --alpha-re disagree");
    }
    return {alpha_re.value_or(alpha.value_or(0.0)), alpha_im.value_or(0.0)};
  }
};

struct ResolvedState {
  DensityMatrix rho;
  Params params;
  bool classical_bosonic_known = false;
  std::optional<CatStateParams> cat;  // set for the qubit-cat family
  double radius = 4.0;
};

double round12(double v) { return std::stod(format_number(v)); }

std::string echo(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ' ';
    s += k + "=" + v;
  }
  return s;
}

Json echo_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

BlochVector parse_bloch(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("--bloch expects x,y,z, got '" + text + "'");
    }
  }
  if (v.size() != 3) throw ValidationError("--bloch expects three components x,y,z");
  return {v[0], v[1], v[2]};
}

struct Boson {
  DensityMatrix rho;
  bool classical;
  double radius;
};

Boson make_boson(const RunConfig& cfg, Params& params) {
  const Complex alpha = cfg.amplitude();
  const FockConfig fock = cfg.fock_cutoff ? FockConfig(*cfg.fock_cutoff) : default_fock(std::abs(alpha));
  params.emplace_back("boson", cfg.boson);
  params.emplace_back("fock_cutoff", std::to_string(fock.cutoff));
  if (cfg.boson == "vacuum") return {vacuum(fock), true, default_beta_radius(0.0)};
  params.emplace_back("alpha_re", format_number(alpha.real()));
  params.emplace_back("alpha_im", format_number(alpha.imag()));
  const double radius = default_beta_radius(std::abs(alpha));
  if (cfg.boson == "coherent") return {coherent_state(alpha, fock), true, radius};
  if (cfg.boson == "even-cat") return {pure_state(even_odd_cat(alpha, 1, fock), {fock.cutoff}), false, radius};
  if (cfg.boson == "odd-cat") return {pure_state(even_odd_cat(alpha, -1, fock), {fock.cutoff}), false, radius};
  throw ValidationError("--boson must be vacuum, coherent, even-cat or odd-cat, got '" + cfg.boson + "'");
}

ResolvedState resolve_state(const RunConfig& cfg) {
  Params params{{"state", cfg.state}};
  if (cfg.state == "cat") {
    const Complex alpha = cfg.amplitude();
    const FockConfig fock = cfg.fock_cutoff ? FockConfig(*cfg.fock_cutoff) : default_fock(std::abs(alpha));
    const CatStateParams p(alpha, cfg.kappa_t, cfg.gamma_t, fock);
    params.emplace_back("alpha_re", format_number(alpha.real()));
    params.emplace_back("alpha_im", format_number(alpha.imag()));
    params.emplace_back("kappa_t", format_number(cfg.kappa_t));
    params.emplace_back("gamma_t", format_number(cfg.gamma_t));
    params.emplace_back("fock_cutoff", std::to_string(fock.cutoff));
    DensityMatrix rho = (cfg.kappa_t == 0.0 && cfg.gamma_t == 0.0) ? cat_hybrid(alpha, fock) : decohered_cat(p);
    return {std::move(rho), params, true, p, default_beta_radius(std::abs(alpha))};
  }
  std::optional<DensityMatrix> qubit;
  if (cfg.state == "pure-qubit") {
    qubit = pure_qubit(cfg.a, cfg.chi);
    params.emplace_back("a", format_number(cfg.a));
    params.emplace_back("chi", format_number(cfg.chi));
  } else if (cfg.state == "diagonal-qubit") {
    qubit = diagonal_qubit(cfg.a);
    params.emplace_back("a", format_number(cfg.a));
  } else if (cfg.state == "bloch-qubit") {
    const BlochVector v = parse_bloch(cfg.bloch);
    qubit = bloch_qubit(v);
    params.emplace_back("bloch",
                        format_number(v.x) + "," + format_number(v.y) + "," + format_number(v.z));
  } else if (cfg.state == "maximally-mixed-qubit") {
    qubit = maximally_mixed_qubit();
  }
  if (qubit) {
    Boson b = make_boson(cfg, params);
    return {tensor(*qubit, b.rho), params, b.classical, std::nullopt, b.radius};
  }
  if (cfg.state.size() > 5 && cfg.state.ends_with(".json")) {
    DensityMatrix rho = read_density_file(cfg.state);
    if (rho.dims().size() == 1 && rho.dim() == 2) {
      Boson b = make_boson(cfg, params);
      return {tensor(rho, b.rho), params, b.classical, std::nullopt, b.radius};
    }
    if (!rho.is_bipartite()) {
      throw ValidationError("--state file must hold a qubit or a qubit-boson state");
    }
    params.emplace_back("fock_cutoff", std::to_string(rho.fock_dim()));
    const DensityMatrix boson = partial_trace(rho, Subsystem::Boson);
    double mean_n = 0.0;
    for (int k = 0; k < boson.dim(); ++k) mean_n += k * boson(k, k).real();
    const double radius = default_beta_radius(std::sqrt(std::max(mean_n, 0.0)));
    return {std::move(rho), params, false, std::nullopt, radius};
  }
  throw ValidationError("unknown --state '" + cfg.state +
                        "'; expected cat, pure-qubit, diagonal-qubit, bloch-qubit, "
                        "maximally-mixed-qubit or a path ending in .json");
}

QuadratureGrid make_grid(const RunConfig& cfg, double radius, Params& params) {
  const double r = cfg.beta_radius.value_or(radius);
  params.emplace_back("n_phi", std::to_string(cfg.n_phi));
  params.emplace_back("n_theta", std::to_string(cfg.n_theta));
  params.emplace_back("n_beta", std::to_string(cfg.n_beta));
  params.emplace_back("beta_radius", format_number(r));
  return build_grid(cfg.n_phi, cfg.n_theta, cfg.n_beta, r);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw ValidationError("cannot open --output file '" + cfg.output + "'");
  f << text;
  f.close();
  if (!f) throw ValidationError("failed writing --output file '" + cfg.output + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// "w:v,w:v" -> weights and bosonic NVs.
std::pair<std::vector<double>, std::vector<double>> parse_bosonic_nv(const std::string& text) {
  std::vector<double> w, v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("--bosonic-nv expects weight:nv pairs");
    try {
      w.push_back(std::stod(item.substr(0, colon)));
      v.push_back(std::stod(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ValidationError("--bosonic-nv: cannot parse '" + item + "'");
    }
  }
  return {w, v};
}

std::optional<double> critical_value(const RunConfig& cfg, const ResolvedState& s, bool required,
                                     Params& params) {
  if (!cfg.bosonic_nv.empty()) {
    if (cfg.classical_bosonic) {
      throw ValidationError("--classical-bosonic and --bosonic-nv are mutually exclusive");
    }
    const auto [w, v] = parse_bosonic_nv(cfg.bosonic_nv);
    params.emplace_back("bosonic_nv", cfg.bosonic_nv);
    return v_critical(w, v);
  }
  if (cfg.classical_bosonic) {
    params.emplace_back("classical_bosonic", "true");
    return v_critical_classical();
  }
  if (required) {
    throw ValidationError(
        "witness needs a bound: pass --classical-bosonic or --bosonic-nv weight:nv,...");
  }
  if (s.classical_bosonic_known) return v_critical_classical();
  return std::nullopt;
}

int cmd_nv(const RunConfig& cfg, bool witness_mode, std::ostream& out) {
  ResolvedState s = resolve_state(cfg);
  Params params = s.params;
  const QuadratureGrid grid = make_grid(cfg, s.radius, params);
  const std::optional<double> v_cr = critical_value(cfg, s, witness_mode, params);
  const NvResult nv = negativity_volume(WignerEvaluator(s.rho), grid);
  Json j;
  j["command"] = witness_mode ? "witness" : "nv";
  j["config"] = echo_json(params);
  j["nv"] = round12(nv.nv);
  j["v_critical"] = v_cr ? Json(round12(*v_cr)) : Json(nullptr);
  j["error_estimate"] = round12(nv.error_estimate);
  j["normalization"] = round12(nv.normalization);
  j["verdict"] = v_cr ? verdict_name(make_report(nv, *v_cr).verdict) : verdict_name(Verdict::Inconclusive);
  emit(cfg, dump(j), out);
  return kOk;
}

int cmd_wigner_slice(const RunConfig& cfg, std::ostream& out) {
  if (cfg.points < 2) throw ValidationError("--points must be at least 2");
  ResolvedState s = resolve_state(cfg);
  Params params = s.params;
  const double radius = cfg.beta_radius.value_or(s.radius);
  if (!(radius > 0.0)) throw ValidationError("--beta-radius must be positive");
  const PhasePoint base = PhasePoint::make(cfg.phi, cfg.theta, {0.0, cfg.beta_im});
  params.emplace_back("phi", format_number(base.phi));
  params.emplace_back("theta", format_number(base.theta));
  params.emplace_back("im_beta", format_number(cfg.beta_im));
  params.emplace_back("beta_radius", format_number(radius));
  params.emplace_back("points", std::to_string(cfg.points));
  const WignerEvaluator ev(s.rho);
  Table t;
  t.config = echo(params);
  t.columns = {"phi", "theta", "re_beta", "im_beta", "w_numeric"};
  if (s.cat) t.columns.push_back("w_closed");
  const Axis3 axis = qubit_kernel_axis(base.phi, base.theta);
  for (double x : linspace(-radius, radius, cfg.points)) {
    const Complex beta(x, cfg.beta_im);
    std::vector<double> row{base.phi, base.theta, x, cfg.beta_im, ev.coefficients(beta).at(axis)};
    if (s.cat) row.push_back(closed_form_decohered_wigner(*s.cat, {base.phi, base.theta, beta}));
    t.rows.push_back(std::move(row));
  }
  emit(cfg, to_csv(t), out);
  return kOk;
}

int cmd_ent_negativity(const RunConfig& cfg, std::ostream& out) {
  ResolvedState s = resolve_state(cfg);
  Json j;
  j["command"] = "ent-negativity";
  j["config"] = echo_json(s.params);
  j["ent_negativity"] = round12(entanglement_negativity(s.rho));
  j["ent_negativity_closed"] = s.cat ? Json(round12(decohered_negativity_closed(*s.cat))) : Json(nullptr);
  emit(cfg, dump(j), out);
  return kOk;
}

int cmd_verify_lindblad(const RunConfig& cfg, std::ostream& out) {
  const Complex alpha = cfg.amplitude();
  const FockConfig fock = cfg.fock_cutoff ? FockConfig(*cfg.fock_cutoff) : default_fock(std::abs(alpha));
  const CatStateParams p(alpha, cfg.kappa_t, cfg.gamma_t, fock);
  const LindbladConfig lc = LindbladConfig::for_products(cfg.kappa_t, cfg.gamma_t, fock);
  double min_eigenvalue = 1.0;
  long steps = -1;
  const DensityMatrix evolved = evolve(cat_hybrid(alpha, fock), lc, [&](double, const ComplexMatrix& rho) {
    ++steps;
    min_eigenvalue = std::min(min_eigenvalue, hermitian_eigenvalues(rho).front());
  });
  const double distance = trace_distance(evolved.matrix(), decohered_cat(p).matrix());
  Params params{{"alpha_re", format_number(alpha.real())},
                {"alpha_im", format_number(alpha.imag())},
                {"kappa_t", format_number(cfg.kappa_t)},
                {"gamma_t", format_number(cfg.gamma_t)},
                {"fock_cutoff", std::to_string(fock.cutoff)}};
  Json j;
  j["command"] = "verify-lindblad";
  j["config"] = echo_json(params);
  j["steps"] = steps;
  j["dt"] = round12(lc.t_final / static_cast<double>(std::max(steps, 1L)));
  j["trace_distance"] = round12(distance);
  j["min_eigenvalue"] = round12(min_eigenvalue);
  j["tolerance"] = kLindbladTolerance;
  j["passed"] = distance < kLindbladTolerance;
  emit(cfg, dump(j), out);
  return distance < kLindbladTolerance ? kOk : kNumericalError;
}

int cmd_figure(const RunConfig& cfg, std::ostream& out) {
  FigureOptions o;
  o.points = cfg.points;
  o.grid = {cfg.n_phi, cfg.n_theta, cfg.n_beta, cfg.beta_radius};
  o.fock_cutoff = cfg.fock_cutoff;
  if (cfg.alpha || cfg.alpha_re || cfg.alpha_im) {
    const Complex a = cfg.amplitude();
    if (a.imag() != 0.0) throw ValidationError("figure: alpha must be real");
    o.alpha = a.real();
  }
  o.kappa_t = cfg.kappa_t;
  o.gamma_t = cfg.gamma_t;
  emit(cfg, to_csv(figure_table(cfg.figure, o)), out);
  return kOk;
}

void add_state_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.alpha, "Real coherent amplitude (shorthand for --alpha-re)");
  sub->add_option("--alpha-re", cfg.alpha_re, "Real part of alpha");
  sub->add_option("--alpha-im", cfg.alpha_im, "Imaginary part of alpha");
  sub->add_option("--kappa-t", cfg.kappa_t, "Qubit damping kappa t");
  sub->add_option("--gamma-t", cfg.gamma_t, "Field damping gamma t");
  sub->add_option("--fock-cutoff", cfg.fock_cutoff, "Fock levels N");
  sub->add_option("--a", cfg.a, "Qubit population parameter a in [0, 1]");
  sub->add_option("--chi", cfg.chi, "Qubit phase chi");
  sub->add_option("--bloch", cfg.bloch, "Bloch vector x,y,z");
  sub->add_option("--state", cfg.state,
                  "cat | pure-qubit | diagonal-qubit | bloch-qubit | maximally-mixed-qubit | path.json");
  sub->add_option("--boson", cfg.boson, "Bosonic factor for qubit states: vacuum | coherent | even-cat | odd-cat");
  sub->add_option("--output", cfg.output, "Write the result to this file");
}

void add_grid_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n-phi", cfg.n_phi, "Uniform phi nodes");
  sub->add_option("--n-theta", cfg.n_theta, "Gauss-Legendre theta nodes");
  sub->add_option("--n-beta", cfg.n_beta, "Gauss-Legendre nodes per beta axis");
  sub->add_option("--beta-radius", cfg.beta_radius, "Half width R of the beta square");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Hybrid qubit-boson Wigner functions, negativity volumes and entanglement witnesses"};
  app.require_subcommand(1);

  CLI::App* nv = app.add_subcommand("nv", "Negativity volume with grid-doubling error estimate (JSON)");
  CLI::App* wit = app.add_subcommand("witness", "Entanglement witness verdict (JSON)");
  CLI::App* slice = app.add_subcommand("wigner-slice", "W along Re beta at fixed phi, theta, Im beta (CSV)");
  CLI::App* ent = app.add_subcommand("ent-negativity", "Entanglement negativity of the partial transpose (JSON)");
  CLI::App* lind = app.add_subcommand("verify-lindblad", "RK4 master equation vs the analytic decohered state (JSON)");
  CLI::App* fig = app.add_subcommand("figure", "Figure data n = 1..5 (CSV)");

  for (CLI::App* sub : {nv, wit, slice, ent, lind, fig}) add_state_options(sub, cfg);
  for (CLI::App* sub : {nv, wit, slice, fig}) add_grid_options(sub, cfg);
  for (CLI::App* sub : {nv, wit}) {
    sub->add_flag("--classical-bosonic", cfg.classical_bosonic, "Assert every bosonic component is classical");
    sub->add_option("--bosonic-nv", cfg.bosonic_nv, "Separable decomposition as weight:bosonic_nv,...");
  }
  for (CLI::App* sub : {slice, fig}) sub->add_option("--points", cfg.points, "Samples along the sweep");
  slice->add_option("--phi", cfg.phi, "phi of the slice");
  slice->add_option("--theta", cfg.theta, "theta of the slice");
  slice->add_option("--beta-im", cfg.beta_im, "Im beta of the slice");
  fig->add_option("n", cfg.figure, "Figure number 1..5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (nv->parsed()) return cmd_nv(cfg, false, out);
    if (wit->parsed()) return cmd_nv(cfg, true, out);
    if (slice->parsed()) return cmd_wigner_slice(cfg, out);
    if (ent->parsed()) return cmd_ent_negativity(cfg, out);
    if (lind->parsed()) return cmd_verify_lindblad(cfg, out);
    return cmd_figure(cfg, out);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  }
}

}  // namespace hw::cli
