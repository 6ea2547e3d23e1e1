#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ofke/pair_decomposition.hpp"
#include "ofke/reference_systems.hpp"

using namespace ofke;

namespace {
constexpr double kPi = std::numbers::pi;

PairState box_pair(const Grid& g1, double box_length = 1.0) {
  const double amp = std::sqrt(2.0 / box_length);
  PairState p;
  p.orbital_a = sample(
      g1, [&](double x) { return amp * std::sin(kPi * x / box_length); });
  p.orbital_b = sample(g1, [&](double x) {
    return amp * std::sin(2.0 * kPi * x / box_length);
  });
  return p;
}

PairState harm_pair(const Grid& g1) {
  PairState p;
  p.orbital_a = sample(g1, [](double x) { return hermite_function(0, x); });
  p.orbital_b = sample(g1, [](double x) { return hermite_function(1, x); });
  return p;
}
} // namespace

TEST_CASE("multivariate kinetic matches the eigenvalue sum") {
  Grid g1 = make_uniform_grid(0.0, 1.0, 512);
  Grid g2 = tensor_square(g1);
  const double t = multivariate_kinetic(box_pair(g1), g2);
  const double expect = 5.0 * kPi * kPi / 2.0;
  CHECK(std::abs(t - expect) / expect < 1e-3);

  Grid h1 = make_uniform_grid(-8.0, 8.0, 512);
  Grid h2 = tensor_square(h1);
  const double th = multivariate_kinetic(harm_pair(h1), h2);
  CHECK(std::abs(th - 1.0) < 1e-3);
}

TEST_CASE("identical orbitals annihilate the pair state") {
  Grid g1 = make_uniform_grid(0.0, 1.0, 256);
  Grid g2 = tensor_square(g1);
  PairState p = box_pair(g1);
  p.orbital_b = p.orbital_a;
  CHECK(multivariate_kinetic(p, g2) == 0.0);
  CHECK_THROWS_AS(information_term(p, g2), std::invalid_argument);
  CHECK_THROWS_AS(verify_decomposition(p, g2, g1), std::invalid_argument);
}

TEST_CASE("orbitals must vanish at the boundary") {
  Grid g1 = make_uniform_grid(-6.0, 6.0, 256); // psi_1(6) ~ 1e-7 > 1e-8
  Grid g2 = tensor_square(g1);
  CHECK_THROWS_AS(multivariate_kinetic(harm_pair(g1), g2),
                  std::invalid_argument);
}

TEST_CASE("pair density recovers the orbital sum pointwise") {
  Grid g1 = make_uniform_grid(0.0, 1.0, 512);
  Grid g2 = tensor_square(g1);
  PairState p = box_pair(g1);
  ScalarField rho = pair_density(p, g2);
  for (std::size_t i = 0; i < rho.values.size(); i += 17) {
    const double expect = p.orbital_a.values[i] * p.orbital_a.values[i] +
                          p.orbital_b.values[i] * p.orbital_b.values[i];
    CHECK(std::abs(rho.values[i] - expect) < 1e-8);
  }
}

TEST_CASE("information term is positive for the box pair") {
  Grid g1 = make_uniform_grid(0.0, 1.0, 512);
  Grid g2 = tensor_square(g1);
  const double info = information_term(box_pair(g1), g2);
  CHECK(info > 0.0);
  // identity oracle: info = multivariate - T_W within quadrature error
  auto rep = verify_decomposition(box_pair(g1), g2, g1);
  CHECK(std::abs(rep.residual) / rep.multivariate <= 1e-3);
  CHECK(info == doctest::Approx(rep.info));
}

TEST_CASE("decomposition identity holds for both built-in pairs") {
  {
    Grid g1 = make_uniform_grid(0.0, 1.0, 512);
    auto rep = verify_decomposition(box_pair(g1), tensor_square(g1), g1);
    CHECK(std::abs(rep.residual) / rep.multivariate <= 1e-3);
    CHECK(rep.info >= -1e-6);
    CHECK(rep.masked_mass < 1e-10);
  }
  {
    Grid g1 = make_uniform_grid(-8.0, 8.0, 512);
    auto rep = verify_decomposition(harm_pair(g1), tensor_square(g1), g1);
    CHECK(std::abs(rep.residual) / rep.multivariate <= 1e-3);
    CHECK(rep.info >= -1e-6);
  }
}

TEST_CASE("residual tightens under lattice refinement") {
  Grid coarse = make_uniform_grid(0.0, 1.0, 256);
  Grid fine = make_uniform_grid(0.0, 1.0, 512);
  auto rc = verify_decomposition(box_pair(coarse), tensor_square(coarse),
                                 coarse);
  auto rf = verify_decomposition(box_pair(fine), tensor_square(fine), fine);
  CHECK(std::abs(rf.residual) < std::abs(rc.residual));
}

TEST_CASE("grid consistency is enforced") {
  Grid g1 = make_uniform_grid(0.0, 1.0, 256);
  Grid g2 = tensor_square(g1);
  Grid other = make_uniform_grid(0.0, 2.0, 256);
  CHECK_THROWS_AS(verify_decomposition(box_pair(g1), g2, other),
                  std::invalid_argument);
  CHECK_THROWS_AS(multivariate_kinetic(box_pair(g1), other),
                  std::invalid_argument);
}
