#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "ofke/reference_systems.hpp"

using namespace ofke;

namespace {
constexpr double kPi = std::numbers::pi;

Grid default_radial() { return make_radial_grid(30.0, 20000); }
Grid default_box(double box_length = 1.0) {
  return make_uniform_grid(0.0, box_length, 8192);
}
Grid default_harm() { return make_uniform_grid(-12.0, 12.0, 16384); }

double overlap(const ScalarField& a, const ScalarField& b, const Grid& g) {
  ScalarField prod(g);
  for (std::size_t i = 0; i < prod.values.size(); ++i) {
    prod.values[i] = a.values[i] * b.values[i];
  }
  return integrate(prod, g);
}
} // namespace

TEST_CASE("hydrogenic systems") {
  Grid g = default_radial();
  auto h1 = hydrogenic(1.0, g);
  CHECK(h1.t_exact == doctest::Approx(0.5));
  CHECK(h1.density.n_particles == doctest::Approx(1.0));
  CHECK(std::abs(integrate(h1.density.field, g) - 1.0) < 1e-6);
  auto h2 = hydrogenic(2.0, g);
  CHECK(h2.t_exact == doctest::Approx(2.0));
  CHECK_THROWS_AS(hydrogenic(0.0, g), std::domain_error);
  CHECK_THROWS_AS(hydrogenic(1.0, default_box()), std::invalid_argument);

  // density equals the squared orbital pointwise
  const auto& phi = h1.orbitals->orbitals[0];
  for (std::size_t i = 0; i < phi.values.size(); i += 997) {
    CHECK(h1.density.field.values[i] ==
          doctest::Approx(phi.values[i] * phi.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("box fermions") {
  Grid g = default_box();
  auto sys = box_fermions_1d(1, 1.0, g);
  CHECK(sys.t_exact == doctest::Approx(kPi * kPi / 2.0));
  CHECK(std::abs(integrate(sys.density.field, g) - 1.0) < 1e-8);
  auto sys2 = box_fermions_1d(2, 1.0, g);
  CHECK(sys2.t_exact == doctest::Approx(5.0 * kPi * kPi / 2.0));
  CHECK_THROWS_AS(box_fermions_1d(0, 1.0, g), std::domain_error);
  Grid wrong = make_uniform_grid(0.0, 2.0, 256);
  CHECK_THROWS_AS(box_fermions_1d(1, 1.0, wrong), std::invalid_argument);
}

TEST_CASE("harmonic fermions") {
  Grid g = default_harm();
  auto sys = harmonic_fermions_1d(1, g);
  CHECK(sys.t_exact == doctest::Approx(0.25));
  auto sys2 = harmonic_fermions_1d(2, g);
  CHECK(sys2.t_exact == doctest::Approx(1.0));
  // ground-state density is the normalized Gaussian, pointwise
  auto x = g.axis_nodes();
  for (std::size_t i = 0; i < x.size(); i += 1111) {
    const double expect = std::exp(-x[i] * x[i]) / std::sqrt(kPi);
    CHECK(std::abs(sys.density.field.values[i] - expect) < 1e-10);
  }
  Grid narrow = make_uniform_grid(-3.0, 3.0, 512);
  CHECK_THROWS_AS(harmonic_fermions_1d(4, narrow), std::domain_error);
}

TEST_CASE("gaussian 3d system") {
  Grid g = default_radial();
  auto sys = gaussian_3d(1.0, g);
  CHECK(sys.t_exact == doctest::Approx(0.75));
  CHECK(std::abs(integrate(sys.density.field, g) - 1.0) < 1e-6);
  CHECK_THROWS_AS(gaussian_3d(-1.0, g), std::domain_error);
}

TEST_CASE("built-in orbitals are orthonormal") {
  Grid gb = default_box();
  auto box = box_fermions_1d(3, 1.0, gb);
  Grid gh = default_harm();
  auto harm = harmonic_fermions_1d(4, gh);
  auto check_set = [&](const OrbitalSet& s, const Grid& g) {
    for (std::size_t i = 0; i < s.orbitals.size(); ++i) {
      for (std::size_t j = i; j < s.orbitals.size(); ++j) {
        const double ov = overlap(s.orbitals[i], s.orbitals[j], g);
        CHECK(std::abs(ov - (i == j ? 1.0 : 0.0)) < 1e-6);
      }
    }
  };
  check_set(*box.orbitals, gb);
  check_set(*harm.orbitals, gh);
}

TEST_CASE("exact kinetic energy from orbitals matches closed forms") {
  Grid gr = default_radial();
  auto hyd = hydrogenic(1.0, gr);
  CHECK(std::abs(exact_kinetic_from_orbitals(*hyd.orbitals, gr) - 0.5) < 1e-5);

  Grid gb = default_box();
  auto box1 = box_fermions_1d(1, 1.0, gb);
  const double t1 = exact_kinetic_from_orbitals(*box1.orbitals, gb);
  CHECK(std::abs(t1 - kPi * kPi / 2.0) / (kPi * kPi / 2.0) < 1e-6);

  auto box3 = box_fermions_1d(3, 1.0, gb);
  const double t3 = exact_kinetic_from_orbitals(*box3.orbitals, gb);
  const double expect3 = 14.0 * kPi * kPi / 2.0; // 1 + 4 + 9
  CHECK(std::abs(t3 - expect3) / expect3 < 1e-6);
}

TEST_CASE("every built-in density integrates to N") {
  Grid gr = default_radial();
  Grid gb = default_box();
  Grid gh = default_harm();
  auto check = [](const ReferenceSystem& s, const Grid& g) {
    const double total = integrate(s.density.field, g);
    CHECK(std::abs(total - s.density.n_particles) <=
          1e-6 * std::max(1.0, s.density.n_particles));
    for (double v : s.density.field.values) CHECK(v >= 0.0);
  };
  check(hydrogenic(1.0, gr), gr);
  check(hydrogenic(2.0, gr), gr);
  check(gaussian_3d(2.0, gr), gr);
  check(box_fermions_1d(4, 1.0, gb), gb);
  check(harmonic_fermions_1d(3, gh), gh);
}

TEST_CASE("density field validation") {
  Grid g = make_uniform_grid(0.0, 1.0, 64);
  ScalarField neg = sample(g, [](double x) { return x - 0.5; });
  CHECK_THROWS_AS(DensityField(g, neg, 0.0), std::domain_error);
  ScalarField ones = sample(g, [](double) { return 1.0; });
  CHECK_THROWS_AS(DensityField(g, ones, 2.0), std::runtime_error);
  DensityField ok(g, ones, 1.0);
  CHECK(ok.n_particles == doctest::Approx(1.0));
}

TEST_CASE("density file round trip") {
  Grid g = make_radial_grid(30.0, 2000);
  auto hyd = hydrogenic(1.0, g);
  const std::string path = "test_density_roundtrip.txt";
  save_density_file(path, hyd.density);
  DensityField back = load_density_file(path);
  CHECK(back.n_particles == doctest::Approx(1.0));
  CHECK(back.grid.measure() == Measure::Radial3D);
  CHECK(back.grid.axis_size() == 2000);
  for (std::size_t i = 0; i < back.field.values.size(); i += 191) {
    CHECK(back.field.values[i] ==
          doctest::Approx(hyd.density.field.values[i]).epsilon(1e-10));
  }
  std::remove(path.c_str());
}

TEST_CASE("density file rejects malformed input") {
  auto write_file = [](const std::string& path, const std::string& body) {
    std::ofstream out(path);
    out << body;
  };
  const std::string path = "test_density_bad.txt";

  write_file(path, "not a density file\n1 2\n");
  CHECK_THROWS_AS(load_density_file(path), std::runtime_error);

  write_file(path,
             "# ofke-density v1\n# measure=line1d n=1 points=3\n"
             "0.0 0.5\n0.5 -0.1\n1.0 0.5\n");
  CHECK_THROWS_AS(load_density_file(path), std::runtime_error);

  // samples integrate to 0.9 under declared n=1
  write_file(path,
             "# ofke-density v1\n# measure=line1d n=1 points=3\n"
             "0.0 0.9\n0.5 0.9\n1.0 0.9\n");
  CHECK_THROWS_AS(load_density_file(path), std::runtime_error);

  // decreasing coordinates
  write_file(path,
             "# ofke-density v1\n# measure=line1d n=1 points=3\n"
             "0.0 1.0\n0.9 1.0\n0.5 1.0\n");
  CHECK_THROWS_AS(load_density_file(path), std::runtime_error);

  CHECK_THROWS_AS(load_density_file("no_such_file.txt"), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("hermite recurrence stays normalized up to n=20") {
  Grid g = make_uniform_grid(-16.0, 16.0, 16384);
  ScalarField psi = sample(g, [](double x) { return hermite_function(20, x); });
  ScalarField sq(g);
  for (std::size_t i = 0; i < sq.values.size(); ++i) {
    sq.values[i] = psi.values[i] * psi.values[i];
  }
  CHECK(integrate(sq, g) == doctest::Approx(1.0).epsilon(1e-8));
}
