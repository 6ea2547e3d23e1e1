#include "ofke/functionals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ofke {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDensityFloor = 1e-14;

double power_integral(const DensityField& rho, double exponent) {
  ScalarField f(rho.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    f.values[i] = std::pow(rho.field.values[i], exponent);
  }
  return integrate(f, rho.grid);
}
} // namespace

double fermi_coupling_sq() { return std::pow(3.0 * kPi * kPi, 2.0 / 3.0); }

void Coefficients::validate() const {
  if (!(c_f_sq > 0.0) || !(c_lt > 0.0) || !(c_1d > 0.0) || !(c_combined >= 0.0)) {
    throw std::domain_error("coefficients must be positive");
  }
  if (c_my && !(*c_my > 0.0)) {
    throw std::domain_error("c_my must be positive when supplied");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("q must lie in [0, 1]");
  }
}

double thomas_fermi_3d(const DensityField& rho, double coeff) {
  if (!(coeff > 0.0)) throw std::domain_error("thomas_fermi_3d: coeff > 0");
  if (rho.grid.measure() == Measure::Square2D) {
    throw std::invalid_argument("thomas_fermi_3d: radial or line grid");
  }
  ScalarField f(rho.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double v = rho.field.values[i];
    if (v < 0.0) throw std::domain_error("thomas_fermi_3d: negative density");
    f.values[i] = std::cbrt(v * v) * v; // rho^{5/3}
  }
  return coeff * integrate(f, rho.grid);
}

double weizsacker(const DensityField& rho) {
  ScalarField s(rho.grid);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    s.values[i] = std::sqrt(rho.field.values[i]);
  }
  ScalarField ds = derivative(s, rho.grid);
  for (double& v : ds.values) v = 0.5 * v * v;
  return integrate(ds, rho.grid);
}

double tf_1d(const DensityField& rho, double coeff) {
  if (rho.grid.measure() != Measure::Line1D) {
    throw std::invalid_argument("tf_1d: line grid required");
  }
  ScalarField f(rho.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double v = rho.field.values[i];
    f.values[i] = v * v * v;
  }
  return coeff * integrate(f, rho.grid);
}

double march_young_1d(const DensityField& rho, double c_my) {
  if (rho.grid.measure() != Measure::Line1D) {
    throw std::invalid_argument("march_young_1d: line grid required");
  }
  const double sqrt_power = power_integral(rho, 1.5);
  return c_my * sqrt_power + 8.0 * weizsacker(rho);
}

FunctionalBreakdown combined_q(const DensityField& rho, double c, double q) {
  if (!(c >= 0.0)) throw std::domain_error("combined_q: C must be >= 0");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("combined_q: q must lie in [0, 1]");
  }
  FunctionalBreakdown out;
  if (rho.grid.measure() == Measure::Line1D) {
    out.tf_term = c == 0.0 ? 0.0 : tf_1d(rho, c);
  } else {
    out.tf_term = c == 0.0 ? 0.0 : thomas_fermi_3d(rho, c);
  }
  out.weizsacker_term = q * weizsacker(rho);
  out.total = out.tf_term + out.weizsacker_term;
  return out;
}

ScalarField functional_derivative_combined(const DensityField& rho, double c,
                                           double q) {
  if (!(c >= 0.0)) throw std::domain_error("C must be >= 0");
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("q must lie in [0, 1]");
  const Grid& g = rho.grid;
  const bool line = g.measure() == Measure::Line1D;
  ScalarField drho = derivative(rho.field, g);
  ScalarField d2rho = second_derivative(rho.field, g);
  ScalarField out(g);
  const auto r = g.axis_nodes();
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const double v = rho.field.values[i];
    double value = line ? 3.0 * c * v * v : (5.0 / 3.0) * c * std::cbrt(v * v);
    if (q > 0.0 && v >= kDensityFloor) {
      double lap = d2rho.values[i];
      if (!line) lap += 2.0 * drho.values[i] / r[i];
      const double grad = drho.values[i];
      value += q * (grad * grad / (8.0 * v * v) - lap / (4.0 * v));
    }
    out.values[i] = value;
  }
  return out;
}

} // namespace ofke
