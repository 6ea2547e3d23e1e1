#include "ofke/reference_systems.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ofke {

namespace {
constexpr double kPi = std::numbers::pi;

void require_1d_span(const Grid& g, double a, double b) {
  const auto x = g.axis_nodes();
  const double tol = 1e-9 * std::max(1.0, std::abs(b - a));
  if (g.measure() != Measure::Line1D || std::abs(x.front() - a) > tol ||
      std::abs(x.back() - b) > tol) {
    throw std::invalid_argument("grid does not span the required interval");
  }
}

DensityField density_from_orbitals(const Grid& g, const OrbitalSet& orbs,
                                   double n_particles) {
  ScalarField rho(g);
  for (const auto& phi : orbs.orbitals) {
    for (std::size_t i = 0; i < rho.values.size(); ++i) {
      rho.values[i] += phi.values[i] * phi.values[i];
    }
  }
  return DensityField(g, std::move(rho), n_particles);
}
} // namespace

DensityField::DensityField(Grid g, ScalarField f, double n, double norm_tol)
    : grid(std::move(g)), field(std::move(f)), n_particles(n) {
  if (!field.lives_on(grid)) {
    throw std::invalid_argument("density field does not live on its grid");
  }
  if (n < 0.0) throw std::domain_error("particle number must be >= 0");
  for (double v : field.values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::domain_error("density values must be finite and >= 0");
    }
  }
  const double total = integrate(field, grid);
  const double scale = std::max(1.0, n);
  if (std::abs(total - n) > norm_tol * scale) {
    std::ostringstream msg;
    msg << "density integrates to " << total << ", expected " << n;
    throw std::runtime_error(msg.str());
  }
}

ReferenceSystem hydrogenic(double z, const Grid& g) {
  if (!(z > 0.0)) throw std::domain_error("hydrogenic: Z must be positive");
  if (g.measure() != Measure::Radial3D) {
    throw std::invalid_argument("hydrogenic: radial grid required");
  }
  const double amp = std::sqrt(z * z * z / kPi);
  ScalarField phi = sample(g, [&](double r) { return amp * std::exp(-z * r); });
  OrbitalSet orbs{{phi}, {1.0}};
  ScalarField rho = sample(
      g, [&](double r) { return (z * z * z / kPi) * std::exp(-2.0 * z * r); });
  return ReferenceSystem{"hydrogen",
                         {{"Z", z}, {"N", 1.0}},
                         DensityField(g, std::move(rho), 1.0),
                         std::move(orbs),
                         0.5 * z * z};
}

ReferenceSystem box_fermions_1d(std::size_t n_particles, double box_length,
                                const Grid& g) {
  if (n_particles < 1) throw std::domain_error("box_fermions_1d: N >= 1");
  if (!(box_length > 0.0)) throw std::domain_error("box_fermions_1d: L > 0");
  require_1d_span(g, 0.0, box_length);
  OrbitalSet orbs;
  const double amp = std::sqrt(2.0 / box_length);
  for (std::size_t n = 1; n <= n_particles; ++n) {
    orbs.orbitals.push_back(sample(g, [&](double x) {
      return amp * std::sin(static_cast<double>(n) * kPi * x / box_length);
    }));
    orbs.occupancy.push_back(1.0);
  }
  double t = 0.0;
  for (std::size_t n = 1; n <= n_particles; ++n) {
    t += static_cast<double>(n) * static_cast<double>(n) * kPi * kPi /
         (2.0 * box_length * box_length);
  }
  auto density =
      density_from_orbitals(g, orbs, static_cast<double>(n_particles));
  return ReferenceSystem{"box1d",
                         {{"L", box_length},
                          {"N", static_cast<double>(n_particles)}},
                         std::move(density), std::move(orbs), t};
}

double hermite_function(std::size_t n, double x) {
  // normalized oscillator eigenfunctions via the stable recurrence
  // h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}
  double h0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return h0;
  double h1 = std::sqrt(2.0) * x * h0;
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double h2 = x * std::sqrt(2.0 / (kd + 1.0)) * h1 -
                      std::sqrt(kd / (kd + 1.0)) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

ReferenceSystem harmonic_fermions_1d(std::size_t n_particles, const Grid& g) {
  if (n_particles < 1) throw std::domain_error("harmonic_fermions_1d: N >= 1");
  if (g.measure() != Measure::Line1D) {
    throw std::invalid_argument("harmonic_fermions_1d: line grid required");
  }
  OrbitalSet orbs;
  for (std::size_t n = 0; n < n_particles; ++n) {
    orbs.orbitals.push_back(
        sample(g, [&](double x) { return hermite_function(n, x); }));
    orbs.occupancy.push_back(1.0);
  }
  // boundary density must be negligible for the box-free quadrature to hold
  double rho_edge = 0.0;
  for (const auto& phi : orbs.orbitals) {
    rho_edge += phi.values.front() * phi.values.front() +
                phi.values.back() * phi.values.back();
  }
  if (rho_edge >= 1e-12) {
    throw std::domain_error(
        "harmonic_fermions_1d: grid too narrow (density at boundary >= 1e-12)");
  }
  const double nd = static_cast<double>(n_particles);
  auto density = density_from_orbitals(g, orbs, nd);
  return ReferenceSystem{"harm1d",
                         {{"omega", 1.0}, {"N", nd}},
                         std::move(density), std::move(orbs),
                         nd * nd / 4.0};
}

ReferenceSystem gaussian_3d(double omega, const Grid& g) {
  if (!(omega > 0.0)) throw std::domain_error("gaussian_3d: omega > 0");
  if (g.measure() != Measure::Radial3D) {
    throw std::invalid_argument("gaussian_3d: radial grid required");
  }
  const double amp = std::pow(omega / kPi, 0.75);
  ScalarField phi =
      sample(g, [&](double r) { return amp * std::exp(-0.5 * omega * r * r); });
  OrbitalSet orbs{{phi}, {1.0}};
  ScalarField rho = sample(g, [&](double r) {
    return std::pow(omega / kPi, 1.5) * std::exp(-omega * r * r);
  });
  return ReferenceSystem{"gauss3d",
                         {{"omega", omega}, {"N", 1.0}},
                         DensityField(g, std::move(rho), 1.0),
                         std::move(orbs),
                         0.75 * omega};
}

double exact_kinetic_from_orbitals(const OrbitalSet& s, const Grid& g) {
  double t = 0.0;
  for (std::size_t k = 0; k < s.orbitals.size(); ++k) {
    ScalarField dphi = derivative(s.orbitals[k], g);
    for (double& v : dphi.values) v *= v;
    t += 0.5 * s.occupancy[k] * integrate(dphi, g);
  }
  return t;
}

void save_density_file(const std::string& path, const DensityField& rho) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  const char* measure =
      rho.grid.measure() == Measure::Radial3D ? "radial3d" : "line1d";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.11e", rho.n_particles);
  out << "# ofke-density v1\n";
  out << "# measure=" << measure << " n=" << buf
      << " points=" << rho.grid.axis_size() << "\n";
  const auto x = rho.grid.axis_nodes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    char line[128];
    std::snprintf(line, sizeof(line), "%.11e %.11e\n", x[i],
                  rho.field.values[i]);
    out << line;
  }
}

DensityField load_density_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open density file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ofke-density v1", 0) != 0) {
    throw std::runtime_error("density file: missing '# ofke-density v1' header");
  }
  if (!std::getline(in, line)) {
    throw std::runtime_error("density file: missing metadata line");
  }
  std::string measure_str;
  double n_particles = -1.0;
  std::size_t declared_points = 0;
  {
    std::istringstream meta(line);
    std::string tok;
    meta >> tok; // leading '#'
    if (tok != "#") throw std::runtime_error("density file: bad metadata line");
    while (meta >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error("density file: bad metadata token: " + tok);
      }
      const std::string key = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      if (key == "measure") {
        measure_str = val;
      } else if (key == "n") {
        n_particles = std::stod(val);
      } else if (key == "points") {
        declared_points = static_cast<std::size_t>(std::stoul(val));
      } else {
        throw std::runtime_error("density file: unknown metadata key: " + key);
      }
    }
  }
  Measure measure;
  if (measure_str == "line1d") {
    measure = Measure::Line1D;
  } else if (measure_str == "radial3d") {
    measure = Measure::Radial3D;
  } else {
    throw std::runtime_error("density file: measure must be line1d or radial3d");
  }
  if (n_particles < 0.0) {
    throw std::runtime_error("density file: missing particle number");
  }

  std::vector<double> coords, values;
  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    double x, v;
    if (!(row >> x >> v)) {
      throw std::runtime_error("density file: parse error at line " +
                               std::to_string(lineno));
    }
    std::string extra;
    if (row >> extra) {
      throw std::runtime_error("density file: trailing data at line " +
                               std::to_string(lineno));
    }
    if (!coords.empty() && !(x > coords.back())) {
      throw std::runtime_error(
          "density file: coordinates must be strictly increasing (line " +
          std::to_string(lineno) + ")");
    }
    if (v < 0.0) {
      throw std::runtime_error("density file: negative density at line " +
                               std::to_string(lineno));
    }
    coords.push_back(x);
    values.push_back(v);
  }
  if (coords.size() < 3) {
    throw std::runtime_error("density file: needs at least 3 samples");
  }
  if (declared_points != 0 && declared_points != coords.size()) {
    throw std::runtime_error("density file: points= does not match sample count");
  }
  Grid g = grid_from_nodes(std::move(coords), measure);
  ScalarField f(g, std::move(values));
  const double total = integrate(f, g);
  const double scale = std::max(1.0, n_particles);
  if (std::abs(total - n_particles) > 0.01 * scale) {
    std::ostringstream msg;
    msg << "density file: samples integrate to " << total
        << " but header declares n=" << n_particles << " (beyond 1%)";
    throw std::runtime_error(msg.str());
  }
  // within the 1% gate the header value wins
  return DensityField(g, std::move(f), n_particles, 0.01);
}

} // namespace ofke
