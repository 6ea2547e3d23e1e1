#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ofke/grid.hpp"

namespace ofke {

/// Nonnegative one-electron density with its particle number.
/// Construction validates nonnegativity and the normalization
/// integrate(field) == n_particles (relative tolerance norm_tol).
struct DensityField {
  Grid grid;
  ScalarField field;
  double n_particles = 0.0;

  DensityField(Grid g, ScalarField f, double n, double norm_tol = 1e-6);
};

/// Real single-particle states, spinless occupancy 1 each.
struct OrbitalSet {
  std::vector<ScalarField> orbitals;
  std::vector<double> occupancy;
};

/// Analytic system bundling a density, optional orbitals and the exact
/// kinetic energy used as ground truth by the bound and fit machinery.
struct ReferenceSystem {
  std::string name;
  std::map<std::string, double> params;
  DensityField density;
  std::optional<OrbitalSet> orbitals;
  double t_exact = 0.0;
};

/// Hydrogen-like ion: rho(r) = (Z^3/pi) exp(-2Zr), N = 1, T = Z^2/2.
ReferenceSystem hydrogenic(double z, const Grid& g);

/// N spinless fermions in a hard box [0, L]:
/// phi_n = sqrt(2/L) sin(n pi x / L), T = sum n^2 pi^2 / (2 L^2).
ReferenceSystem box_fermions_1d(std::size_t n_particles, double box_length,
                                const Grid& g);

/// N spinless fermions in the omega = 1 harmonic well; Hermite-function
/// orbitals by the normalized three-term recurrence, T = N^2/4.
ReferenceSystem harmonic_fermions_1d(std::size_t n_particles, const Grid& g);

/// Single particle in an isotropic Gaussian state:
/// rho(r) = (omega/pi)^{3/2} exp(-omega r^2), T = 3 omega / 4.
ReferenceSystem gaussian_3d(double omega, const Grid& g);

/// (1/2) sum_i integrate(|d phi_i|^2); matches the analytic kinetic energy
/// of a Slater determinant of real orbitals.
double exact_kinetic_from_orbitals(const OrbitalSet& s, const Grid& g);

/// Hermite function h_n(x) (normalized oscillator eigenfunction, omega = 1).
double hermite_function(std::size_t n, double x);

// --- density file format (text, line oriented) ---
//   # ofke-density v1
//   # measure=<line1d|radial3d> n=<particle number> points=<count>
//   <coordinate> <density>        one pair per line, coordinates increasing
DensityField load_density_file(const std::string& path);
void save_density_file(const std::string& path, const DensityField& rho);

} // namespace ofke
