#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "ofke/bounds.hpp"
#include "ofke/reports.hpp"

using namespace ofke;

namespace {
constexpr double kPi = std::numbers::pi;
const double kHydrogenTf = 0.216 * std::pow(kPi, -2.0 / 3.0);

Grid default_radial() { return make_radial_grid(30.0, 20000); }
} // namespace

TEST_CASE("zumbach coupling from direct arithmetic") {
  const double expect =
      15.0 * std::pow(4.0 * kPi, 2.0) * 0.6 * std::pow(0.2, 2.0 / 3.0);
  CHECK(zumbach_coupling() == doctest::Approx(expect).epsilon(1e-14));
  CHECK(std::abs(zumbach_coupling() - 486.1) < 0.1);
}

TEST_CASE("hydrogen bound values") {
  Grid g = default_radial();
  auto hyd = hydrogenic(1.0, g);
  CHECK(lower_bound_lieb_thirring(hyd.density, 9.11) ==
        doctest::Approx(4.555 * kHydrogenTf).epsilon(1e-6));
  CHECK(lower_bound_lieb_thirring(hyd.density, 9.578) ==
        doctest::Approx(4.789 * kHydrogenTf).epsilon(1e-6));
  CHECK(upper_bound_tfw(hyd.density) ==
        doctest::Approx(0.98190).epsilon(1e-4));
  const double zum = zumbach_bound(hyd.density, 1.0);
  CHECK(zum == doctest::Approx((1.0 + zumbach_coupling()) * 0.5).epsilon(1e-5));
  CHECK(std::abs(zum - 243.55) < 0.05);
  CHECK(zum >= weizsacker(hyd.density));

  Grid small = make_radial_grid(5.0, 64);
  DensityField zero(small, ScalarField(small), 0.0);
  CHECK(upper_bound_tfw(zero) == 0.0);
  CHECK(lower_bound_lieb_thirring(zero, 9.11) == 0.0);
}

TEST_CASE("1D upper bound uses the rho^3 term") {
  Grid g = make_uniform_grid(0.0, 1.0, 8192);
  auto box = box_fermions_1d(1, 1.0, g);
  const double expect = (kPi * kPi / 2.0) * 2.5 + kPi * kPi / 2.0;
  CHECK(upper_bound_tfw(box.density) == doctest::Approx(expect).epsilon(1e-5));
  CHECK(std::abs(upper_bound_tfw(box.density) - 17.2718) < 1e-3);
}

TEST_CASE("verify_chain on hydrogen") {
  Grid g = default_radial();
  auto rep = verify_chain(hydrogenic(1.0, g));
  CHECK(rep.chain_ok[0]);
  CHECK(rep.chain_ok[1]);
  CHECK(rep.chain_ok[2]);
  CHECK(rep.zumbach.has_value());
  CHECK(rep.margin_lower == doctest::Approx(rep.t_exact - rep.lower_lt));
  CHECK(rep.margin_upper == doctest::Approx(rep.upper_tfw - rep.t_exact));
  CHECK(rep.margin_lower > 0.0);
  CHECK(rep.margin_upper > 0.0);
  CHECK(rep.upper_tfw < *rep.zumbach);
}

TEST_CASE("verify_chain on the 1D box family") {
  Grid g = make_uniform_grid(0.0, 1.0, 4096);
  for (std::size_t n = 1; n <= 8; ++n) {
    auto rep = verify_chain(box_fermions_1d(n, 1.0, g));
    CHECK_FALSE(rep.zumbach.has_value());
    CHECK(rep.chain_ok[0]); // (c_1d/3) int rho^3 <= T for the box family
    CHECK(rep.chain_ok[1]);
    CHECK(rep.chain_ok[2]); // vacuous in 1D
  }
}

TEST_CASE("bound violations are reported, not thrown") {
  // the 1D semiclassical lower coefficient overshoots for the N=1 well
  Grid g = make_uniform_grid(-12.0, 12.0, 8192);
  auto rep = verify_chain(harmonic_fermions_1d(1, g));
  CHECK_FALSE(rep.chain_ok[0]); // 0.302 > 0.25, a genuine finding
  CHECK(rep.chain_ok[1]);
  CHECK(rep.margin_lower < 0.0);
}

TEST_CASE("degenerate zero-density report") {
  Grid g = make_radial_grid(5.0, 64);
  ReferenceSystem zero{"zero",
                       {{"N", 0.0}},
                       DensityField(g, ScalarField(g), 0.0),
                       std::nullopt,
                       0.0};
  auto rep = verify_chain(zero);
  CHECK(rep.t_exact == 0.0);
  CHECK(rep.lower_lt == 0.0);
  CHECK(rep.upper_tfw == 0.0);
  CHECK(*rep.zumbach == 0.0);
  CHECK(rep.chain_ok[0]);
  CHECK(rep.chain_ok[1]);
  CHECK(rep.chain_ok[2]);
}

TEST_CASE("lower bound grows with the constant") {
  Grid g = make_radial_grid(30.0, 4000);
  auto hyd = hydrogenic(1.0, g);
  CHECK(lower_bound_lieb_thirring(hyd.density, 9.11) <=
        lower_bound_lieb_thirring(hyd.density, 9.578));
}

TEST_CASE("zumbach precondition") {
  Grid g = make_radial_grid(30.0, 2000);
  auto hyd = hydrogenic(1.0, g);
  CHECK_THROWS_AS(zumbach_bound(hyd.density, 0.5), std::domain_error);
}

TEST_CASE("tf-vs-gradient auxiliary check") {
  Grid g = default_radial();
  auto hyd = hydrogenic(1.0, g);
  // int rho^{5/3} = 0.1007, T_W = 0.5: holds iff c_pg >= 0.2014
  CHECK(check_tf_vs_gradient(hyd.density, 1.0, 1.0).holds);
  CHECK_FALSE(check_tf_vs_gradient(hyd.density, 1.0, 0.1).holds);
  CHECK_THROWS_AS(check_tf_vs_gradient(hyd.density, 1.0, -1.0),
                  std::domain_error);
}

TEST_CASE("bound report JSON round-trips bit-for-bit") {
  Grid g = make_radial_grid(30.0, 4000);
  auto rep = verify_chain(hydrogenic(1.0, g));
  RunConfigEcho cfg{"bounds", "hydrogen", {{"r_max", 30.0}, {"n", 4000.0}},
                    {{"c_lt", 9.11}}};
  const std::string text = render_bound_report(rep, cfg, ReportFormat::Json);
  auto parsed = nlohmann::json::parse(text);

  BoundReport back;
  back.system = parsed["system"];
  for (const auto& [key, value] : parsed["params"].items()) {
    back.params[key] = value.get<double>();
  }
  back.t_exact = parsed["t_exact"];
  back.lower_lt = parsed["lower_lt"];
  back.upper_tfw = parsed["upper_tfw"];
  back.zumbach = parsed["zumbach"].get<double>();
  back.margin_lower = parsed["margin_lower"];
  back.margin_upper = parsed["margin_upper"];
  for (int i = 0; i < 3; ++i) back.chain_ok[i] = parsed["chain_ok"][i];

  const std::string again = render_bound_report(back, cfg, ReportFormat::Json);
  CHECK(text == again);
  // margins survive the 12-digit decimal representation exactly
  CHECK(format_sig12(back.margin_lower) == format_sig12(rep.margin_lower));
  CHECK(format_sig12(back.margin_upper) == format_sig12(rep.margin_upper));
}

TEST_CASE("csv and json carry the same numbers") {
  Grid g = make_radial_grid(30.0, 4000);
  auto rep = verify_chain(hydrogenic(1.0, g));
  RunConfigEcho cfg{"bounds", "hydrogen", {}, {}};
  const std::string csv = render_bound_report(rep, cfg, ReportFormat::Csv);
  CHECK(csv.find(format_sig12(rep.lower_lt)) != std::string::npos);
  CHECK(csv.find(format_sig12(rep.upper_tfw)) != std::string::npos);
  const std::string json = render_bound_report(rep, cfg, ReportFormat::Json);
  CHECK(json.find(format_sig12(rep.lower_lt)) != std::string::npos);
}
