#include "ofke/grid.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ofke {

namespace {

std::uint64_t next_grid_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

bool nearly_uniform(const std::vector<double>& x) {
  if (x.size() < 2) return true;
  const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs((x[i] - x[i - 1]) - h) > 1e-9 * std::abs(h)) return false;
  }
  return true;
}

std::vector<double> trapezoid_weights(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> w(n);
  w[0] = 0.5 * (x[1] - x[0]);
  for (std::size_t i = 1; i + 1 < n; ++i) w[i] = 0.5 * (x[i + 1] - x[i - 1]);
  w[n - 1] = 0.5 * (x[n - 1] - x[n - 2]);
  return w;
}

std::vector<double> simpson_weights(std::size_t n, double h) {
  if (n % 2 == 0) {
    throw std::domain_error("Simpson rule needs an odd node count");
  }
  std::vector<double> w(n, 2.0 * h / 3.0);
  for (std::size_t i = 1; i < n; i += 2) w[i] = 4.0 * h / 3.0;
  w[0] = w[n - 1] = h / 3.0;
  return w;
}

} // namespace

Grid Grid::make(std::vector<double> nodes, std::vector<double> weights,
                Measure m) {
  if (nodes.size() < 3) throw std::domain_error("grid needs at least 3 nodes");
  if (nodes.size() != weights.size()) {
    throw std::invalid_argument("node/weight size mismatch");
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) {
      throw std::domain_error("grid nodes must be strictly increasing");
    }
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw std::domain_error("grid weights must be positive");
  }
  auto d = std::make_shared<Data>();
  d->spacing = (nodes.back() - nodes.front()) /
               static_cast<double>(nodes.size() - 1);
  d->uniform = nearly_uniform(nodes);
  d->nodes = std::move(nodes);
  d->weights = std::move(weights);
  d->measure = m;
  d->id = next_grid_id();
  return Grid(std::move(d));
}

ScalarField::ScalarField(const Grid& g, std::vector<double> v)
    : values(std::move(v)), grid_id(g.id()) {
  if (values.size() != g.node_count()) {
    throw std::invalid_argument("field length does not match grid node count");
  }
}

ScalarField sample(const Grid& g, const std::function<double(double)>& fn) {
  if (g.measure() == Measure::Square2D) {
    throw std::invalid_argument("sample() expects a 1D grid");
  }
  ScalarField f(g);
  auto x = g.axis_nodes();
  for (std::size_t i = 0; i < x.size(); ++i) f.values[i] = fn(x[i]);
  return f;
}

Grid make_uniform_grid(double a, double b, std::size_t n, QuadratureRule rule) {
  if (!(b > a)) throw std::domain_error("make_uniform_grid: b must exceed a");
  if (n < 3) throw std::domain_error("make_uniform_grid: n must be >= 3");
  const double h = (b - a) / static_cast<double>(n - 1);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a + static_cast<double>(i) * h;
  x[n - 1] = b;
  std::vector<double> w = rule == QuadratureRule::Simpson
                              ? simpson_weights(n, h)
                              : trapezoid_weights(x);
  return Grid::make(std::move(x), std::move(w), Measure::Line1D);
}

Grid make_radial_grid(double r_max, std::size_t n, QuadratureRule rule) {
  if (!(r_max > 0.0)) throw std::domain_error("make_radial_grid: r_max <= 0");
  if (n < 3) throw std::domain_error("make_radial_grid: n must be >= 3");
  const double h = r_max / static_cast<double>(n);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (static_cast<double>(i) + 0.5) * h;
  }
  std::vector<double> w = rule == QuadratureRule::Simpson
                              ? simpson_weights(n, h)
                              : trapezoid_weights(r);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] *= 4.0 * std::numbers::pi * r[i] * r[i];
  }
  return Grid::make(std::move(r), std::move(w), Measure::Radial3D);
}

Grid tensor_square(const Grid& line) {
  if (line.measure() != Measure::Line1D) {
    throw std::invalid_argument("tensor_square expects a line grid");
  }
  auto x = line.axis_nodes();
  auto w = line.axis_weights();
  return Grid::make(std::vector<double>(x.begin(), x.end()),
                    std::vector<double>(w.begin(), w.end()),
                    Measure::Square2D);
}

Grid grid_from_nodes(std::vector<double> nodes, Measure m) {
  if (m == Measure::Square2D) {
    throw std::invalid_argument("grid_from_nodes: line or radial only");
  }
  if (nodes.size() < 3) throw std::domain_error("grid needs at least 3 nodes");
  if (m == Measure::Radial3D && nodes.front() <= 0.0) {
    throw std::domain_error("radial nodes must be positive");
  }
  std::vector<double> w = trapezoid_weights(nodes);
  if (m == Measure::Radial3D) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      w[i] *= 4.0 * std::numbers::pi * nodes[i] * nodes[i];
    }
  }
  return Grid::make(std::move(nodes), std::move(w), m);
}

namespace detail {

double kahan_sum(std::span<const double> v) {
  double sum = 0.0, c = 0.0;
  for (double value : v) {
    const double y = value - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

void derivative_span(std::span<const double> x, std::span<const double> f,
                     std::span<double> out) {
  const std::size_t n = x.size();
  if (n < 3) throw std::domain_error("derivative needs at least 3 nodes");
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = x[i] - x[i - 1];
    const double hp = x[i + 1] - x[i];
    out[i] = -hp / (hm * (hm + hp)) * f[i - 1] +
             (hp - hm) / (hm * hp) * f[i] +
             hm / (hp * (hm + hp)) * f[i + 1];
  }
  {
    const double h1 = x[1] - x[0];
    const double h2 = x[2] - x[1];
    out[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * f[0] +
             (h1 + h2) / (h1 * h2) * f[1] -
             h1 / (h2 * (h1 + h2)) * f[2];
  }
  {
    const double h1 = x[n - 2] - x[n - 3];
    const double h2 = x[n - 1] - x[n - 2];
    out[n - 1] = h2 / (h1 * (h1 + h2)) * f[n - 3] -
                 (h1 + h2) / (h1 * h2) * f[n - 2] +
                 (2.0 * h2 + h1) / (h2 * (h1 + h2)) * f[n - 1];
  }
}

void second_derivative_span(std::span<const double> x,
                            std::span<const double> f, std::span<double> out) {
  const std::size_t n = x.size();
  if (n < 4) throw std::domain_error("second derivative needs >= 4 nodes");
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = x[i] - x[i - 1];
    const double hp = x[i + 1] - x[i];
    out[i] = 2.0 * (f[i - 1] / (hm * (hm + hp)) - f[i] / (hm * hp) +
                    f[i + 1] / (hp * (hm + hp)));
  }
  const double h0 = x[1] - x[0];
  const double hn = x[n - 1] - x[n - 2];
  // one-sided 4-point stencils, second order on uniform spacing
  out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / (h0 * h0);
  out[n - 1] =
      (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / (hn * hn);
}

} // namespace detail

double integrate(const ScalarField& f, const Grid& g) {
  if (!f.lives_on(g)) {
    throw std::invalid_argument("integrate: field does not live on this grid");
  }
  const auto w = g.axis_weights();
  const std::size_t n = g.axis_size();
  std::vector<double> terms(f.values.size());
  if (g.measure() == Measure::Square2D) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        terms[i * n + j] = w[i] * w[j] * f.values[i * n + j];
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) terms[i] = w[i] * f.values[i];
  }
  return detail::kahan_sum(terms);
}

ScalarField derivative(const ScalarField& f, const Grid& g) {
  if (!f.lives_on(g)) {
    throw std::invalid_argument("derivative: field does not live on this grid");
  }
  if (g.measure() == Measure::Square2D) {
    throw std::invalid_argument("derivative: line or radial grids only");
  }
  ScalarField out(g);
  detail::derivative_span(g.axis_nodes(), f.values, out.values);
  return out;
}

ScalarField second_derivative(const ScalarField& f, const Grid& g) {
  if (!f.lives_on(g)) {
    throw std::invalid_argument(
        "second_derivative: field does not live on this grid");
  }
  if (g.measure() == Measure::Square2D) {
    throw std::invalid_argument("second_derivative: line or radial grids only");
  }
  ScalarField out(g);
  detail::second_derivative_span(g.axis_nodes(), f.values, out.values);
  return out;
}

} // namespace ofke
