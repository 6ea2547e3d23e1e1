#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace ofke {

enum class Measure { Line1D, Radial3D, Square2D };
enum class QuadratureRule { Trapezoid, Simpson };

/// Immutable quadrature grid. Copies share identity (cheap, shared payload).
///
/// Line grids integrate plain dx; radial grids carry the 4*pi*r^2 Jacobian in
/// their weights and exclude r = 0 by a half-step offset; square grids are the
/// tensor product of a line rule with itself (node (i,j) has weight w[i]*w[j],
/// fields stored row-major).
class Grid {
public:
  Measure measure() const { return d_->measure; }
  std::span<const double> axis_nodes() const { return d_->nodes; }
  std::span<const double> axis_weights() const { return d_->weights; }
  std::size_t axis_size() const { return d_->nodes.size(); }
  std::size_t node_count() const {
    const std::size_t n = d_->nodes.size();
    return d_->measure == Measure::Square2D ? n * n : n;
  }
  /// Nominal step (exact for uniform grids, mean spacing otherwise).
  double spacing() const { return d_->spacing; }
  bool uniform() const { return d_->uniform; }
  /// Identity token; preserved by copies, distinct across constructions.
  std::uint64_t id() const { return d_->id; }

  static Grid make(std::vector<double> nodes, std::vector<double> weights,
                   Measure m);

private:
  struct Data {
    std::vector<double> nodes;
    std::vector<double> weights;
    Measure measure;
    double spacing;
    bool uniform;
    std::uint64_t id;
  };
  std::shared_ptr<const Data> d_;
  explicit Grid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

/// Field sampled on the nodes of one grid (flat row-major for square grids).
struct ScalarField {
  std::vector<double> values;
  std::uint64_t grid_id = 0;

  ScalarField() = default;
  explicit ScalarField(const Grid& g)
      : values(g.node_count(), 0.0), grid_id(g.id()) {}
  ScalarField(const Grid& g, std::vector<double> v);

  bool lives_on(const Grid& g) const {
    return grid_id == g.id() && values.size() == g.node_count();
  }
};

/// Sample fn(x) on every node of a 1D (line or radial) grid.
ScalarField sample(const Grid& g, const std::function<double(double)>& fn);

/// n equally spaced nodes on [a, b], endpoints included.
Grid make_uniform_grid(double a, double b, std::size_t n,
                       QuadratureRule rule = QuadratureRule::Trapezoid);

/// n nodes at (i + 1/2) * r_max / n; weights carry the 4*pi*r^2 Jacobian.
Grid make_radial_grid(double r_max, std::size_t n,
                      QuadratureRule rule = QuadratureRule::Trapezoid);

/// Tensor square of a line grid (axis nodes shared by both coordinates).
Grid tensor_square(const Grid& line);

/// Non-uniform line or radial grid from strictly increasing nodes
/// (trapezoid weights; radial nodes must be positive).
Grid grid_from_nodes(std::vector<double> nodes, Measure m);

/// Quadrature sum of the field under the grid's measure
/// (compensated summation, deterministic).
double integrate(const ScalarField& f, const Grid& g);

/// d/dx (or d/dr): second-order central differences in the interior,
/// one-sided second-order at the boundaries. Line and radial grids only.
ScalarField derivative(const ScalarField& f, const Grid& g);

/// Second derivative by the analogous stencils (one order lower at the
/// boundary nodes of non-uniform grids).
ScalarField second_derivative(const ScalarField& f, const Grid& g);

namespace detail {
// Raw stencil kernels over a contiguous range of samples; exposed so the
// 2D routines can apply them row- and column-wise.
void derivative_span(std::span<const double> x, std::span<const double> f,
                     std::span<double> out);
void second_derivative_span(std::span<const double> x,
                            std::span<const double> f, std::span<double> out);
double kahan_sum(std::span<const double> v);
} // namespace detail

} // namespace ofke
