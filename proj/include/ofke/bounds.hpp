#pragma once

#include <array>
#include <optional>

#include "ofke/functionals.hpp"

namespace ofke {

/// N-dependent prefactor 15 (4 pi)^2 (3/5) (1/5)^{2/3} of the
/// gradient-only upper bound (~486.05).
double zumbach_coupling();

/// One system's bound chain: lower <= exact <= upper (<= zumbach in 3D).
/// Violations are recorded, never thrown; they are scientific output.
struct BoundReport {
  std::string system;
  std::map<std::string, double> params;
  double t_exact = 0.0;
  double lower_lt = 0.0;
  double upper_tfw = 0.0;
  std::optional<double> zumbach; // absent on line grids (3D-only bound)
  double margin_lower = 0.0;     // t_exact - lower_lt
  double margin_upper = 0.0;     // upper_tfw - t_exact
  std::array<bool, 3> chain_ok{false, false, false};
};

/// (C_F^2/2) int rho^{5/3} + T_W on radial grids; c_1d int rho^3 + T_W on
/// line grids.
double upper_bound_tfw(const DensityField& rho,
                       const Coefficients& coeffs = {});

/// (c_lt/2) int rho^{5/3}: the rigorous kinetic lower bound in 3D.
double lower_bound_lieb_thirring(const DensityField& rho, double c_lt);

/// [1 + C_Zu N^{2/3}] * (1/8) int |grad rho|^2 / rho  (3D derivation).
double zumbach_bound(const DensityField& rho, double n_particles);

/// Evaluate the whole chain for one reference system. On line grids the
/// Zumbach comparison is not applicable (reported absent, third flag
/// vacuously true) and the lower bound uses (c_1d/3) int rho^3, the filled
/// Fermi-sea mean-square momentum being P_F^2/3 in 1D.
BoundReport verify_chain(const ReferenceSystem& sys,
                         const Coefficients& coeffs = {});

/// Auxiliary Sobolev-type comparison int rho^{5/3} <= c_pg N^{2/3} T_W.
/// c_pg has no default; callers supply their own constant.
struct TfGradientComparison {
  double lhs = 0.0; // int rho^{5/3}
  double rhs = 0.0; // c_pg N^{2/3} T_W
  bool holds = false;
};
TfGradientComparison check_tf_vs_gradient(const DensityField& rho,
                                          double n_particles, double c_pg);

} // namespace ofke
