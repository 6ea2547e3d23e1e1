#include "ofke/pair_decomposition.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ofke {

namespace {

constexpr double kMaskThreshold = 1e-14;

struct Lattice {
  std::size_t n;
  std::span<const double> x;
  std::span<const double> w;
};

Lattice lattice_of(const Grid& g2) {
  if (g2.measure() != Measure::Square2D) {
    throw std::invalid_argument("pair decomposition needs a SQUARE_2D grid");
  }
  return {g2.axis_size(), g2.axis_nodes(), g2.axis_weights()};
}

void check_boundary(const ScalarField& phi, std::size_t n) {
  if (phi.values.size() != n) {
    throw std::invalid_argument("orbital does not match the lattice axis");
  }
  if (std::abs(phi.values.front()) > 1e-8 ||
      std::abs(phi.values.back()) > 1e-8) {
    throw std::invalid_argument(
        "orbital does not vanish at the grid boundary (> 1e-8)");
  }
}

std::vector<double> build_theta(const PairState& p, const Lattice& lat) {
  const auto& a = p.orbital_a.values;
  const auto& b = p.orbital_b.values;
  std::vector<double> theta(lat.n * lat.n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < lat.n; ++i) {
    for (std::size_t j = 0; j < lat.n; ++j) {
      theta[i * lat.n + j] = inv_sqrt2 * (a[i] * b[j] - b[i] * a[j]);
    }
  }
  return theta;
}

// d/dx1 along axis 0, applied per maximal run of enabled rows so that a
// stencil never straddles a disabled row.
std::vector<double> derivative_axis0(const std::vector<double>& m,
                                     const Lattice& lat,
                                     const std::vector<char>& row_ok) {
  const std::size_t n = lat.n;
  const auto& x = lat.x;
  std::vector<double> d(n * n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    if (!row_ok[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && row_ok[j]) ++j;
    const std::size_t len = j - i;
    if (len >= 3) {
      for (std::size_t r = i + 1; r + 1 < j; ++r) {
        const double hm = x[r] - x[r - 1];
        const double hp = x[r + 1] - x[r];
        const double cm = -hp / (hm * (hm + hp));
        const double c0 = (hp - hm) / (hm * hp);
        const double cp = hm / (hp * (hm + hp));
        const double* fm = &m[(r - 1) * n];
        const double* f0 = &m[r * n];
        const double* fp = &m[(r + 1) * n];
        double* out = &d[r * n];
        for (std::size_t col = 0; col < n; ++col) {
          out[col] = cm * fm[col] + c0 * f0[col] + cp * fp[col];
        }
      }
      {
        const double h1 = x[i + 1] - x[i];
        const double h2 = x[i + 2] - x[i + 1];
        const double c0 = -(2.0 * h1 + h2) / (h1 * (h1 + h2));
        const double c1 = (h1 + h2) / (h1 * h2);
        const double c2 = -h1 / (h2 * (h1 + h2));
        for (std::size_t col = 0; col < n; ++col) {
          d[i * n + col] = c0 * m[i * n + col] + c1 * m[(i + 1) * n + col] +
                           c2 * m[(i + 2) * n + col];
        }
      }
      {
        const std::size_t r = j - 1;
        const double h1 = x[r - 1] - x[r - 2];
        const double h2 = x[r] - x[r - 1];
        const double c0 = h2 / (h1 * (h1 + h2));
        const double c1 = -(h1 + h2) / (h1 * h2);
        const double c2 = (2.0 * h2 + h1) / (h2 * (h1 + h2));
        for (std::size_t col = 0; col < n; ++col) {
          d[r * n + col] = c0 * m[(r - 2) * n + col] +
                           c1 * m[(r - 1) * n + col] + c2 * m[r * n + col];
        }
      }
    } else if (len == 2) {
      const double h = x[i + 1] - x[i];
      for (std::size_t col = 0; col < n; ++col) {
        const double slope = (m[(i + 1) * n + col] - m[i * n + col]) / h;
        d[i * n + col] = slope;
        d[(i + 1) * n + col] = slope;
      }
    }
    i = j;
  }
  return d;
}

double lattice_sum(const std::vector<double>& integrand, const Lattice& lat) {
  std::vector<double> terms(integrand.size());
  for (std::size_t i = 0; i < lat.n; ++i) {
    for (std::size_t j = 0; j < lat.n; ++j) {
      terms[i * lat.n + j] = lat.w[i] * lat.w[j] * integrand[i * lat.n + j];
    }
  }
  return detail::kahan_sum(terms);
}

double pair_norm(const std::vector<double>& theta, const Lattice& lat) {
  std::vector<double> sq(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) sq[k] = theta[k] * theta[k];
  return lattice_sum(sq, lat);
}

std::vector<double> density_rows(const std::vector<double>& theta,
                                 const Lattice& lat) {
  std::vector<double> rho(lat.n, 0.0);
  for (std::size_t i = 0; i < lat.n; ++i) {
    double sum = 0.0, c = 0.0;
    const double* row = &theta[i * lat.n];
    for (std::size_t j = 0; j < lat.n; ++j) {
      const double y = 2.0 * lat.w[j] * row[j] * row[j] - c;
      const double t = sum + y;
      c = (t - sum) - y;
      sum = t;
    }
    rho[i] = sum;
  }
  return rho;
}

struct InfoResult {
  double info;
  double masked_mass;
};

InfoResult information_impl(const std::vector<double>& theta,
                            const std::vector<double>& dtheta,
                            const std::vector<double>& rho,
                            const Lattice& lat) {
  const std::size_t n = lat.n;
  std::vector<char> row_ok(n);
  for (std::size_t i = 0; i < n; ++i) {
    row_ok[i] = rho[i] >= kMaskThreshold ? 1 : 0;
  }
  std::vector<double> drho(n, 0.0);
  {
    // rho' over the same row runs as f
    std::vector<double> tmp(n);
    std::size_t i = 0;
    while (i < n) {
      if (!row_ok[i]) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < n && row_ok[j]) ++j;
      if (j - i >= 3) {
        detail::derivative_span(lat.x.subspan(i, j - i),
                                std::span<const double>(&rho[i], j - i),
                                std::span<double>(&drho[i], j - i));
      }
      i = j;
    }
  }

  std::vector<double> f(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!row_ok[i]) continue;
    const double inv = 2.0 / rho[i];
    const double* trow = &theta[i * n];
    double* frow = &f[i * n];
    for (std::size_t j = 0; j < n; ++j) frow[j] = inv * trow[j] * trow[j];
  }
  std::vector<double> df = derivative_axis0(f, lat, row_ok);

  std::vector<double> integrand(n * n, 0.0);
  std::vector<double> masked(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* trow = &theta[i * n];
    if (!row_ok[i]) {
      for (std::size_t j = 0; j < n; ++j) {
        masked[i * n + j] = lat.w[i] * lat.w[j] * trow[j] * trow[j];
      }
      continue;
    }
    const double logslope = drho[i] / (2.0 * rho[i]);
    const double* frow = &f[i * n];
    const double* dfrow = &df[i * n];
    const double* dthrow = &dtheta[i * n];
    for (std::size_t j = 0; j < n; ++j) {
      if (frow[j] >= kMaskThreshold) {
        integrand[i * n + j] = rho[i] * dfrow[j] * dfrow[j] / frow[j];
      } else {
        // analytic limit of rho |d1 f|^2 / f as theta -> 0
        const double u = dthrow[j] - trow[j] * logslope;
        integrand[i * n + j] = 8.0 * u * u;
        masked[i * n + j] = lat.w[i] * lat.w[j] * trow[j] * trow[j];
      }
    }
  }
  return {0.125 * lattice_sum(integrand, lat), detail::kahan_sum(masked)};
}

} // namespace

ScalarField pair_density(const PairState& p, const Grid& g2) {
  const Lattice lat = lattice_of(g2);
  check_boundary(p.orbital_a, lat.n);
  check_boundary(p.orbital_b, lat.n);
  const auto theta = build_theta(p, lat);
  auto rho = density_rows(theta, lat);
  ScalarField out;
  out.values = std::move(rho);
  out.grid_id = p.orbital_a.grid_id;
  return out;
}

double multivariate_kinetic(const PairState& p, const Grid& g2) {
  const Lattice lat = lattice_of(g2);
  check_boundary(p.orbital_a, lat.n);
  check_boundary(p.orbital_b, lat.n);
  const auto theta = build_theta(p, lat);
  const std::vector<char> all_rows(lat.n, 1);
  auto dtheta = derivative_axis0(theta, lat, all_rows);
  for (double& v : dtheta) v *= v;
  return lattice_sum(dtheta, lat);
}

double information_term(const PairState& p, const Grid& g2) {
  const Lattice lat = lattice_of(g2);
  check_boundary(p.orbital_a, lat.n);
  check_boundary(p.orbital_b, lat.n);
  const auto theta = build_theta(p, lat);
  const double norm = pair_norm(theta, lat);
  if (norm < 1e-12) {
    throw std::invalid_argument("information_term: zero-norm pair state");
  }
  if (std::abs(norm - 1.0) > 1e-6) {
    throw std::invalid_argument("information_term: pair state not normalized");
  }
  const std::vector<char> all_rows(lat.n, 1);
  const auto dtheta = derivative_axis0(theta, lat, all_rows);
  const auto rho = density_rows(theta, lat);
  return information_impl(theta, dtheta, rho, lat).info;
}

DecompositionReport verify_decomposition(const PairState& p, const Grid& g2,
                                         const Grid& g1) {
  const Lattice lat = lattice_of(g2);
  if (g1.measure() != Measure::Line1D || g1.axis_size() != lat.n) {
    throw std::invalid_argument("verify_decomposition: g1 must be g2's axis");
  }
  for (std::size_t i = 0; i < lat.n; ++i) {
    if (std::abs(g1.axis_nodes()[i] - lat.x[i]) > 1e-12) {
      throw std::invalid_argument("verify_decomposition: g1/g2 node mismatch");
    }
  }
  check_boundary(p.orbital_a, lat.n);
  check_boundary(p.orbital_b, lat.n);

  const auto theta = build_theta(p, lat);
  const double norm = pair_norm(theta, lat);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw std::invalid_argument(
        "verify_decomposition: pair state not normalized to 1 within 1e-6");
  }

  const std::vector<char> all_rows(lat.n, 1);
  const auto dtheta = derivative_axis0(theta, lat, all_rows);

  DecompositionReport rep;
  rep.n1 = g1.axis_size();
  rep.n2 = lat.n;
  {
    std::vector<double> sq(dtheta.size());
    for (std::size_t k = 0; k < sq.size(); ++k) sq[k] = dtheta[k] * dtheta[k];
    rep.multivariate = lattice_sum(sq, lat);
  }
  const auto rho_rows = density_rows(theta, lat);
  {
    ScalarField rho1(g1, std::vector<double>(rho_rows));
    for (double& v : rho1.values) v = std::max(v, 0.0);
    DensityField rho(g1, std::move(rho1), 2.0);
    rep.weizsacker = weizsacker(rho);
  }
  const InfoResult info = information_impl(theta, dtheta, rho_rows, lat);
  rep.info = info.info;
  rep.masked_mass = info.masked_mass;
  rep.residual = rep.multivariate - rep.weizsacker - rep.info;
  return rep;
}

} // namespace ofke
