#pragma once

#include <optional>

#include "ofke/reference_systems.hpp"

namespace ofke {

/// Maximum momentum coupling (3 pi^2)^{2/3} of the 3D Fermi momentum
/// P_F = (3 pi^2 rho)^{1/3}.
double fermi_coupling_sq();

/// Coupling constants shared across the functional and bound evaluators.
/// All values in Hartree atomic units.
struct Coefficients {
  double c_f_sq = fermi_coupling_sq(); // (3 pi^2)^{2/3} ~ 9.5708
  double c_lt = 9.11;                  // rigorous lower-bound constant (9.578 alt)
  double c_1d = 4.934802200544679;     // pi^2/2, max-momentum 1D coefficient
  std::optional<double> c_my;          // 1D sqrt-power constant, caller supplied
  double c_combined = fermi_coupling_sq() / 2.0; // prefactor C of the q-model
  double q = 1.0;                      // gradient-term weight, in [0, 1]

  void validate() const;
};

/// Per-term values of one functional evaluation.
struct FunctionalBreakdown {
  double tf_term = 0.0;
  double weizsacker_term = 0.0;
  std::optional<double> info_term;
  double total = 0.0;
};

/// coeff * integral of rho^{5/3}. Radial grids are the intended domain; a
/// line-measure density is accepted with the same integrand (the 5/3 power
/// is the 3D law; in 1D prefer tf_1d).
double thomas_fermi_3d(const DensityField& rho, double coeff);

/// (1/8) int |grad rho|^2 / rho, evaluated as (1/2) int |grad sqrt(rho)|^2.
/// The sqrt form needs no division, so exact zeros of rho (box walls,
/// far tails) are handled without masking.
double weizsacker(const DensityField& rho);

/// coeff * integral of rho^3 on a line grid (P_F proportional to rho in 1D).
double tf_1d(const DensityField& rho, double coeff);

/// c_my * int rho^{3/2} + int |grad rho|^2 / rho on a line grid.
/// The gradient term intentionally carries no 1/8; the printed 1D form is
/// reproduced as-is, so this equals c_my * int rho^{3/2} + 8 * weizsacker.
double march_young_1d(const DensityField& rho, double c_my);

/// T ~ C * int rho^{5/3} + q * (1/8) int |grad rho|^2 / rho with the single
/// tunable weight q in [0, 1]. On line grids the first term uses rho^3, the
/// 1D power of the same maximum-momentum argument. C = 0 is allowed (pure
/// gradient functional).
FunctionalBreakdown combined_q(const DensityField& rho, double c, double q);

/// Pointwise variational derivative of the combined functional:
///   (5/3) C rho^{2/3} + q [ |grad rho|^2 / (8 rho^2) - lap rho / (4 rho) ]
/// (3 C rho^2 leading term on line grids). Nodes with rho below 1e-14 get
/// only the first term; the gradient part is masked there.
ScalarField functional_derivative_combined(const DensityField& rho, double c,
                                           double q);

} // namespace ofke
