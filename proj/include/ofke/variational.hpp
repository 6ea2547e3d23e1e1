#pragma once

#include "ofke/functionals.hpp"

namespace ofke {

/// Least-squares fit of the gradient weight q against exact kinetic energies.
struct QFitResult {
  double q_star = 0.0;
  double c_used = 0.0;
  struct Entry {
    std::string name;
    double t_exact;
    double t_model; // at q_star
    double error;   // t_exact - t_model
  };
  std::vector<Entry> per_system;
  double rms_error = 0.0;
  double rms_at_q0 = 0.0;
  double rms_at_q1 = 0.0;
};

/// q* = argmin over [0,1] of sum (t_exact - C*TF - q*T_W)^2, solved in closed
/// form and clamped. TF is int rho^{5/3} on radial grids and int rho^3 on
/// line grids. Throws if q is unidentifiable (all T_W vanish).
QFitResult fit_q(const std::vector<ReferenceSystem>& systems, double c);

struct SolverOptions {
  std::size_t max_iterations = 5000;
  double step = 1e-3;       // initial step, adapted by backtracking
  double tolerance = 1e-10; // stop when an accepted step changes E less
  std::optional<ScalarField> initial_chi; // warm start (default: Gaussian)
  void validate() const;
};

struct MinimizeResult {
  DensityField density;
  double energy = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  std::vector<double> energy_trace; // accepted iterates, nonincreasing
};

/// Projected gradient descent on E[rho] = T_q[rho] + int v rho over
/// rho = chi^2 with int rho = N restored after every step.
///
/// Energy and gradient are evaluated in the chi representation, where the
/// gradient-term contribution is exactly -q chi'' (no division by rho, so
/// density nodes are harmless); this equals 2 chi (dT/d rho + v) wherever
/// chi != 0. Steps are accepted only if the energy decreases.
MinimizeResult minimize_energy(const ScalarField& v_ext, double n_particles,
                               double c, double q, const Grid& g,
                               const SolverOptions& opts = {});

} // namespace ofke
