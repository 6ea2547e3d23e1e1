#include "ofke/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ofke {

namespace {
constexpr double kPi = std::numbers::pi;
}

double zumbach_coupling() {
  return 15.0 * (4.0 * kPi) * (4.0 * kPi) * (3.0 / 5.0) *
         std::pow(0.2, 2.0 / 3.0);
}

double upper_bound_tfw(const DensityField& rho, const Coefficients& coeffs) {
  coeffs.validate();
  if (rho.grid.measure() == Measure::Line1D) {
    return tf_1d(rho, coeffs.c_1d) + weizsacker(rho);
  }
  return thomas_fermi_3d(rho, coeffs.c_f_sq / 2.0) + weizsacker(rho);
}

double lower_bound_lieb_thirring(const DensityField& rho, double c_lt) {
  if (!(c_lt > 0.0)) throw std::domain_error("c_lt must be positive");
  return thomas_fermi_3d(rho, c_lt / 2.0);
}

double zumbach_bound(const DensityField& rho, double n_particles) {
  if (!(n_particles >= 1.0)) {
    throw std::domain_error("zumbach_bound: N >= 1 required");
  }
  const double bracket =
      1.0 + zumbach_coupling() * std::pow(n_particles, 2.0 / 3.0);
  return bracket * weizsacker(rho);
}

BoundReport verify_chain(const ReferenceSystem& sys,
                         const Coefficients& coeffs) {
  coeffs.validate();
  BoundReport rep;
  rep.system = sys.name;
  rep.params = sys.params;
  rep.t_exact = sys.t_exact;

  const DensityField& rho = sys.density;
  const bool line = rho.grid.measure() == Measure::Line1D;
  const double tw = weizsacker(rho);
  if (line) {
    rep.lower_lt = tf_1d(rho, coeffs.c_1d / 3.0);
    rep.upper_tfw = tf_1d(rho, coeffs.c_1d) + tw;
    rep.zumbach = std::nullopt;
  } else {
    rep.lower_lt = thomas_fermi_3d(rho, coeffs.c_lt / 2.0);
    rep.upper_tfw = thomas_fermi_3d(rho, coeffs.c_f_sq / 2.0) + tw;
    const double n = rho.n_particles;
    rep.zumbach =
        (1.0 + zumbach_coupling() * std::pow(n, 2.0 / 3.0)) * tw;
  }
  rep.margin_lower = rep.t_exact - rep.lower_lt;
  rep.margin_upper = rep.upper_tfw - rep.t_exact;
  rep.chain_ok[0] = rep.lower_lt <= rep.t_exact;
  rep.chain_ok[1] = rep.t_exact <= rep.upper_tfw;
  rep.chain_ok[2] = rep.zumbach ? rep.upper_tfw <= *rep.zumbach : true;
  return rep;
}

TfGradientComparison check_tf_vs_gradient(const DensityField& rho,
                                          double n_particles, double c_pg) {
  if (!(c_pg > 0.0)) throw std::domain_error("c_pg must be positive");
  TfGradientComparison out;
  ScalarField f(rho.grid);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double v = rho.field.values[i];
    f.values[i] = std::cbrt(v * v) * v;
  }
  out.lhs = integrate(f, rho.grid);
  out.rhs = c_pg * std::pow(n_particles, 2.0 / 3.0) * weizsacker(rho);
  out.holds = out.lhs <= out.rhs;
  return out;
}

} // namespace ofke
