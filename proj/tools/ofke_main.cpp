// ofke: evaluate kinetic-energy density functionals, verify bound chains,
// decompose two-fermion kinetic energies, fit the gradient weight q and run
// the constrained minimizer. Reports are deterministic: fixed key order and
// 12 significant digits, byte-identical across runs with the same config.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "ofke/reports.hpp"

namespace {

using namespace ofke;

constexpr double kPi = std::numbers::pi;

struct Options {
  std::string command;
  std::string system;
  std::string density_path;
  double z = 1.0;
  double box_length = 1.0;
  double n_value = -1.0; // -1: command default
  double omega = 1.0;
  std::optional<std::size_t> grid_n;
  std::optional<double> grid_rmax;
  std::size_t n2 = 512;
  std::optional<double> c_combined;
  double q = 1.0;
  double c_lt = 9.11;
  double c_1d = kPi * kPi / 2.0;
  std::optional<double> c_my;
  std::string format = "json";
  std::string out_path;
  bool strict = false;
};

ReportFormat parse_format(const std::string& f) {
  if (f == "json") return ReportFormat::Json;
  if (f == "csv") return ReportFormat::Csv;
  if (f == "text") return ReportFormat::Text;
  throw std::invalid_argument("format must be json, csv or text");
}

void emit(const Options& opt, const std::string& report) {
  if (opt.out_path.empty()) {
    std::cout << report;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw std::runtime_error("cannot open " + opt.out_path);
  out << report;
}

Coefficients coefficients_from(const Options& opt, double c_default) {
  Coefficients c;
  c.c_lt = opt.c_lt;
  c.c_1d = opt.c_1d;
  c.c_my = opt.c_my;
  c.c_combined = opt.c_combined.value_or(c_default);
  c.q = opt.q;
  c.validate();
  return c;
}

struct BuiltSystem {
  ReferenceSystem system;
  std::map<std::string, double> grid_echo;
};

BuiltSystem build_system(const Options& opt) {
  if (opt.system == "hydrogen" || opt.system == "gauss3d") {
    const double rmax = opt.grid_rmax.value_or(30.0);
    const std::size_t n = opt.grid_n.value_or(20000);
    Grid g = make_radial_grid(rmax, n);
    auto sys = opt.system == "hydrogen" ? hydrogenic(opt.z, g)
                                        : gaussian_3d(opt.omega, g);
    return {std::move(sys),
            {{"r_max", rmax}, {"n", static_cast<double>(n)}}};
  }
  if (opt.system == "box1d") {
    const std::size_t n = opt.grid_n.value_or(8192);
    Grid g = make_uniform_grid(0.0, opt.box_length, n);
    const std::size_t particles =
        opt.n_value < 0 ? 1 : static_cast<std::size_t>(opt.n_value);
    return {box_fermions_1d(particles, opt.box_length, g),
            {{"a", 0.0}, {"b", opt.box_length}, {"n", static_cast<double>(n)}}};
  }
  if (opt.system == "harm1d") {
    const double half = opt.grid_rmax.value_or(12.0);
    const std::size_t n = opt.grid_n.value_or(16384);
    Grid g = make_uniform_grid(-half, half, n);
    const std::size_t particles =
        opt.n_value < 0 ? 1 : static_cast<std::size_t>(opt.n_value);
    return {harmonic_fermions_1d(particles, g),
            {{"a", -half}, {"b", half}, {"n", static_cast<double>(n)}}};
  }
  throw std::invalid_argument(
      "unknown system (expected hydrogen|box1d|harm1d|gauss3d)");
}

std::map<std::string, double> coeff_echo(const Coefficients& c) {
  std::map<std::string, double> m{{"c_f_sq", c.c_f_sq},
                                  {"c_lt", c.c_lt},
                                  {"c_1d", c.c_1d},
                                  {"C", c.c_combined},
                                  {"q", c.q}};
  if (c.c_my) m["c_my"] = *c.c_my;
  return m;
}

int run_eval(const Options& opt) {
  EvalReport rep;
  RunConfigEcho cfg;
  cfg.command = "eval";
  std::optional<DensityField> from_file;
  std::optional<BuiltSystem> built;
  if (!opt.density_path.empty()) {
    from_file = load_density_file(opt.density_path);
    cfg.source = opt.density_path;
    rep.system = "file";
    cfg.grid = {{"n", static_cast<double>(from_file->grid.axis_size())}};
  } else {
    built = build_system(opt);
    cfg.source = built->system.name;
    cfg.grid = built->grid_echo;
    rep.system = built->system.name;
    rep.params = built->system.params;
    rep.t_exact = built->system.t_exact;
  }
  const DensityField& rho = from_file ? *from_file : built->system.density;
  const bool line = rho.grid.measure() == Measure::Line1D;
  const Coefficients coeffs = coefficients_from(
      opt, line ? kPi * kPi / 6.0 : fermi_coupling_sq() / 2.0);
  cfg.coeffs = coeff_echo(coeffs);
  rep.c = coeffs.c_combined;
  rep.q = coeffs.q;
  rep.breakdown = combined_q(rho, coeffs.c_combined, coeffs.q);
  emit(opt, render_eval_report(rep, cfg, parse_format(opt.format)));
  return 0;
}

int run_bounds(const Options& opt) {
  if (!opt.density_path.empty()) {
    throw std::invalid_argument(
        "bounds needs a built-in system (exact T required)");
  }
  BuiltSystem built = build_system(opt);
  const bool line = built.system.density.grid.measure() == Measure::Line1D;
  const Coefficients coeffs = coefficients_from(
      opt, line ? kPi * kPi / 6.0 : fermi_coupling_sq() / 2.0);
  BoundReport rep = verify_chain(built.system, coeffs);
  RunConfigEcho cfg{"bounds", built.system.name, built.grid_echo,
                    coeff_echo(coeffs)};
  emit(opt, render_bound_report(rep, cfg, parse_format(opt.format)));
  return 0;
}

int run_decompose(const Options& opt) {
  PairState pair;
  Grid g1 = [&] {
    if (opt.system == "box1d") {
      return make_uniform_grid(0.0, opt.box_length, opt.n2);
    }
    if (opt.system == "harm1d") {
      return make_uniform_grid(-opt.grid_rmax.value_or(8.0),
                               opt.grid_rmax.value_or(8.0), opt.n2);
    }
    throw std::invalid_argument("decompose supports box1d and harm1d");
  }();
  if (opt.system == "box1d") {
    const double amp = std::sqrt(2.0 / opt.box_length);
    pair.orbital_a = sample(
        g1, [&](double x) { return amp * std::sin(kPi * x / opt.box_length); });
    pair.orbital_b = sample(g1, [&](double x) {
      return amp * std::sin(2.0 * kPi * x / opt.box_length);
    });
  } else {
    pair.orbital_a = sample(g1, [](double x) { return hermite_function(0, x); });
    pair.orbital_b = sample(g1, [](double x) { return hermite_function(1, x); });
  }
  Grid g2 = tensor_square(g1);
  DecompositionReport rep = verify_decomposition(pair, g2, g1);
  rep.system = opt.system;
  const Coefficients coeffs = coefficients_from(opt, kPi * kPi / 6.0);
  RunConfigEcho cfg{"decompose", opt.system,
                    {{"a", g1.axis_nodes().front()},
                     {"b", g1.axis_nodes().back()},
                     {"n2", static_cast<double>(opt.n2)}},
                    coeff_echo(coeffs)};
  emit(opt, render_decomposition_report(rep, cfg, parse_format(opt.format)));
  return 0;
}

int run_fit_q(const Options& opt) {
  std::vector<ReferenceSystem> family;
  std::map<std::string, double> grid_echo;
  if (opt.system == "box1d") {
    const std::size_t n = opt.grid_n.value_or(8192);
    const std::size_t count =
        opt.n_value < 0 ? 8 : static_cast<std::size_t>(opt.n_value);
    Grid g = make_uniform_grid(0.0, opt.box_length, n);
    for (std::size_t k = 1; k <= count; ++k) {
      auto sys = box_fermions_1d(k, opt.box_length, g);
      sys.name = "box1d_N" + std::to_string(k);
      family.push_back(std::move(sys));
    }
    grid_echo = {{"a", 0.0}, {"b", opt.box_length},
                 {"n", static_cast<double>(n)}};
  } else if (opt.system == "harm1d") {
    const double half = opt.grid_rmax.value_or(12.0);
    const std::size_t n = opt.grid_n.value_or(16384);
    const std::size_t count =
        opt.n_value < 0 ? 6 : static_cast<std::size_t>(opt.n_value);
    Grid g = make_uniform_grid(-half, half, n);
    for (std::size_t k = 1; k <= count; ++k) {
      auto sys = harmonic_fermions_1d(k, g);
      sys.name = "harm1d_N" + std::to_string(k);
      family.push_back(std::move(sys));
    }
    grid_echo = {{"a", -half}, {"b", half}, {"n", static_cast<double>(n)}};
  } else {
    throw std::invalid_argument("fit-q supports box1d and harm1d families");
  }
  const Coefficients coeffs = coefficients_from(opt, kPi * kPi / 6.0);
  QFitResult rep = fit_q(family, coeffs.c_combined);
  RunConfigEcho cfg{"fit-q", opt.system, grid_echo, coeff_echo(coeffs)};
  emit(opt, render_fit_report(rep, cfg, parse_format(opt.format)));
  return 0;
}

int run_solve(const Options& opt) {
  Grid g = [&] {
    if (opt.system == "box1d") {
      return make_uniform_grid(0.0, opt.box_length,
                               opt.grid_n.value_or(513));
    }
    if (opt.system == "harm1d") {
      const double half = opt.grid_rmax.value_or(8.0);
      return make_uniform_grid(-half, half, opt.grid_n.value_or(513));
    }
    throw std::invalid_argument("solve supports box1d and harm1d potentials");
  }();
  ScalarField v_ext =
      opt.system == "box1d"
          ? sample(g, [](double) { return 0.0; })
          : sample(g, [&](double x) {
              return 0.5 * opt.omega * opt.omega * x * x;
            });
  const double particles = opt.n_value < 0 ? 1.0 : opt.n_value;
  const Coefficients coeffs = coefficients_from(opt, 0.0);
  MinimizeResult res = minimize_energy(v_ext, particles, coeffs.c_combined,
                                       coeffs.q, g);
  SolveReport rep{res.energy, res.converged, res.iterations, particles,
                  coeffs.c_combined, coeffs.q};
  RunConfigEcho cfg{"solve", opt.system,
                    {{"a", g.axis_nodes().front()},
                     {"b", g.axis_nodes().back()},
                     {"n", static_cast<double>(g.axis_size())}},
                    coeff_echo(coeffs)};
  emit(opt, render_solve_report(rep, cfg, parse_format(opt.format)));
  if (opt.strict && !res.converged) return 3;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbital-free kinetic-energy functional toolkit"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_density) {
    cmd->add_option("--system", opt.system,
                    "built-in system: hydrogen|box1d|harm1d|gauss3d");
    if (with_density) {
      cmd->add_option("--density", opt.density_path,
                      "density file (ofke-density v1)");
    }
    cmd->add_option("--Z", opt.z, "nuclear charge (hydrogen)");
    cmd->add_option("--L", opt.box_length, "box length (box1d)");
    cmd->add_option("--N", opt.n_value, "particle number / family size");
    cmd->add_option("--omega", opt.omega, "oscillator frequency");
    cmd->add_option("--grid-n", opt.grid_n, "grid nodes override");
    cmd->add_option("--grid-rmax", opt.grid_rmax,
                    "radial extent / half-width override");
    cmd->add_option("--C", opt.c_combined, "combined-model prefactor");
    cmd->add_option("--q", opt.q, "gradient-term weight in [0,1]");
    cmd->add_option("--c-lt", opt.c_lt, "lower-bound constant (9.11 or 9.578)");
    cmd->add_option("--c-1d", opt.c_1d, "1D max-momentum coefficient");
    cmd->add_option("--c-my", opt.c_my, "1D sqrt-power constant");
    cmd->add_option("--format", opt.format, "json|csv|text");
    cmd->add_option("--out", opt.out_path, "write report to file");
    cmd->add_flag("--strict", opt.strict,
                  "numerical failures become nonzero exit");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate the combined functional");
  add_common(eval_cmd, true);
  auto* bounds_cmd = app.add_subcommand("bounds", "verify the bound chain");
  add_common(bounds_cmd, false);
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "two-fermion kinetic decomposition on a square lattice");
  add_common(decompose_cmd, false);
  decompose_cmd->add_option("--n2", opt.n2, "lattice nodes per axis");
  auto* fit_cmd = app.add_subcommand("fit-q", "least-squares fit of q");
  add_common(fit_cmd, false);
  auto* solve_cmd =
      app.add_subcommand("solve", "constrained energy minimization");
  add_common(solve_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!opt.density_path.empty() && !opt.system.empty()) {
      throw std::invalid_argument("give either --system or --density, not both");
    }
    if (opt.density_path.empty() && opt.system.empty()) opt.system = "hydrogen";
    if (eval_cmd->parsed()) return run_eval(opt);
    if (bounds_cmd->parsed()) return run_bounds(opt);
    if (decompose_cmd->parsed()) return run_decompose(opt);
    if (fit_cmd->parsed()) return run_fit_q(opt);
    if (solve_cmd->parsed()) return run_solve(opt);
  } catch (const std::exception& e) {
    std::cerr << "ofke: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
