#pragma once

#include "ofke/functionals.hpp"

namespace ofke {

/// Two-fermion state theta(x1,x2) = (a(x1) b(x2) - b(x1) a(x2)) / sqrt(2),
/// held implicitly through its two real orbitals on a shared line grid.
struct PairState {
  ScalarField orbital_a;
  ScalarField orbital_b;
};

/// Split of the two-particle kinetic energy into the density-gradient part
/// and the conditional-density (Fisher-information) part.
struct DecompositionReport {
  std::string system;
  std::size_t n1 = 0; // 1D quadrature nodes
  std::size_t n2 = 0; // lattice nodes per axis
  double multivariate = 0.0;
  double weizsacker = 0.0;
  double info = 0.0;
  double residual = 0.0; // multivariate - weizsacker - info
  double masked_mass = 0.0;
};

/// (1/2) sum_i int |grad_i theta|^2, computed as the double integral of
/// |d theta / d x1|^2 (the two index terms are equal by antisymmetry).
/// Orbitals must vanish at the grid boundary (tolerance 1e-8).
double multivariate_kinetic(const PairState& p, const Grid& g2);

/// (1/8) int int rho(x1) |d f / d x1|^2 / f dx2 dx1, with the conditional
/// density f(x2|x1) = 2 theta^2(x1,x2) / rho(x1). Nodes where f < 1e-14
/// (theta's nodal lines, exact on the lattice diagonal) take the analytic
/// limit 8 [d1 theta - theta rho'/(2 rho)]^2 instead of the hazardous
/// division; their probability mass is reported by verify_decomposition.
double information_term(const PairState& p, const Grid& g2);

/// Full identity check: multivariate == weizsacker[rho] + info within
/// quadrature error, with rho(x) = 2 int theta^2(x,y) dy.
DecompositionReport verify_decomposition(const PairState& p, const Grid& g2,
                                         const Grid& g1);

/// rho recovered from theta; equals a^2 + b^2 for orthonormal orbitals.
ScalarField pair_density(const PairState& p, const Grid& g2);

} // namespace ofke
