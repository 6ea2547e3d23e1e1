#include "ofke/variational.hpp"

#include <cmath>
#include <stdexcept>

namespace ofke {

namespace {

double tf_integral(const ReferenceSystem& sys) {
  if (sys.density.grid.measure() == Measure::Line1D) {
    return tf_1d(sys.density, 1.0);
  }
  return thomas_fermi_3d(sys.density, 1.0);
}

double rms(const std::vector<double>& residuals) {
  double s = 0.0;
  for (double r : residuals) s += r * r;
  return std::sqrt(s / static_cast<double>(residuals.size()));
}

} // namespace

QFitResult fit_q(const std::vector<ReferenceSystem>& systems, double c) {
  if (systems.empty()) throw std::invalid_argument("fit_q: empty system list");
  if (systems.size() < 2) {
    throw std::invalid_argument("fit_q: at least 2 systems required");
  }
  if (!(c >= 0.0)) throw std::domain_error("fit_q: C must be >= 0");

  std::vector<double> tf(systems.size()), tw(systems.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    tf[i] = tf_integral(systems[i]);
    tw[i] = weizsacker(systems[i].density);
    const double r = systems[i].t_exact - c * tf[i];
    num += tw[i] * r;
    den += tw[i] * tw[i];
  }
  if (den <= 1e-30) {
    throw std::invalid_argument(
        "fit_q: q unidentifiable (all Weizsacker terms vanish)");
  }
  QFitResult out;
  out.c_used = c;
  out.q_star = std::clamp(num / den, 0.0, 1.0);

  std::vector<double> res_q(systems.size()), res_0(systems.size()),
      res_1(systems.size());
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const double base = systems[i].t_exact - c * tf[i];
    res_q[i] = base - out.q_star * tw[i];
    res_0[i] = base;
    res_1[i] = base - tw[i];
    out.per_system.push_back({systems[i].name, systems[i].t_exact,
                              c * tf[i] + out.q_star * tw[i], res_q[i]});
  }
  out.rms_error = rms(res_q);
  out.rms_at_q0 = rms(res_0);
  out.rms_at_q1 = rms(res_1);
  return out;
}

void SolverOptions::validate() const {
  if (max_iterations == 0 || !(step > 0.0) || !(tolerance > 0.0)) {
    throw std::domain_error("solver options must be positive");
  }
}

MinimizeResult minimize_energy(const ScalarField& v_ext, double n_particles,
                               double c, double q, const Grid& g,
                               const SolverOptions& opts) {
  opts.validate();
  if (!(n_particles > 0.0)) throw std::domain_error("N must be positive");
  if (!(c >= 0.0)) throw std::domain_error("C must be >= 0");
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("q must lie in [0, 1]");
  if (!v_ext.lives_on(g)) {
    throw std::invalid_argument("v_ext does not live on the grid");
  }
  if (g.measure() == Measure::Square2D) {
    throw std::invalid_argument("minimize_energy: line or radial grids only");
  }
  const bool line = g.measure() == Measure::Line1D;
  const auto x = g.axis_nodes();
  const auto w = g.axis_weights();
  const std::size_t n = g.axis_size();

  auto weighted_dot = [&](const std::vector<double>& a,
                          const std::vector<double>& b) {
    std::vector<double> terms(n);
    for (std::size_t i = 0; i < n; ++i) terms[i] = w[i] * a[i] * b[i];
    return detail::kahan_sum(terms);
  };
  auto renormalize = [&](std::vector<double>& chi) {
    const double norm = weighted_dot(chi, chi);
    if (!(norm > 0.0)) throw std::runtime_error("iterate collapsed to zero");
    const double scale = std::sqrt(n_particles / norm);
    for (double& v : chi) v *= scale;
  };
  auto energy_of = [&](const std::vector<double>& chi) {
    std::vector<double> terms(n);
    std::vector<double> dchi(n);
    detail::derivative_span(x, chi, dchi);
    for (std::size_t i = 0; i < n; ++i) {
      const double rho = chi[i] * chi[i];
      const double tf_density =
          line ? rho * rho * rho : std::cbrt(rho * rho) * rho;
      terms[i] = w[i] * (c * tf_density + 0.5 * q * dchi[i] * dchi[i] +
                         v_ext.values[i] * rho);
    }
    return detail::kahan_sum(terms);
  };
  auto gradient_of = [&](const std::vector<double>& chi) {
    std::vector<double> grad(n);
    std::vector<double> d2chi(n);
    detail::second_derivative_span(x, chi, d2chi);
    for (std::size_t i = 0; i < n; ++i) {
      // d/dchi of the TF density: 1D d(chi^6) = 6 chi^5,
      // 3D d(chi^{10/3}) = (10/3) chi |chi|^{4/3}
      const double tf_grad =
          line ? 6.0 * c * std::pow(chi[i], 5)
               : (10.0 / 3.0) * c * chi[i] *
                     std::cbrt(chi[i] * chi[i] * chi[i] * chi[i]);
      grad[i] = tf_grad - q * d2chi[i] + 2.0 * v_ext.values[i] * chi[i];
    }
    if (!line) {
      // radial Laplacian: chi'' + 2 chi'/r
      std::vector<double> dchi(n);
      detail::derivative_span(x, chi, dchi);
      for (std::size_t i = 0; i < n; ++i) {
        grad[i] -= q * 2.0 * dchi[i] / x[i];
      }
    }
    // remove the component along chi: steps stay on the normalization shell
    std::vector<double> proj = grad;
    const double alpha = weighted_dot(grad, chi) / weighted_dot(chi, chi);
    for (std::size_t i = 0; i < n; ++i) proj[i] -= alpha * chi[i];
    return proj;
  };

  std::vector<double> chi(n);
  if (opts.initial_chi) {
    if (!opts.initial_chi->lives_on(g)) {
      throw std::invalid_argument("initial_chi does not live on the grid");
    }
    chi = opts.initial_chi->values;
  } else {
    // smooth positive start: Gaussian scaled to the grid extent
    const double mid = 0.5 * (x.front() + x.back());
    const double width = 0.25 * (x.back() - x.front());
    for (std::size_t i = 0; i < n; ++i) {
      const double u = (x[i] - mid) / width;
      chi[i] = std::exp(-0.5 * u * u);
    }
  }
  renormalize(chi);

  double energy = energy_of(chi);
  double step = opts.step;
  MinimizeResult result{DensityField(g, ScalarField(g), 0.0, 1.0), 0.0, false,
                        0, {}};
  result.energy_trace.push_back(energy);

  std::size_t it = 0;
  bool converged = false;
  for (; it < opts.max_iterations; ++it) {
    const auto grad = gradient_of(chi);
    bool accepted = false;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      std::vector<double> trial(n);
      for (std::size_t i = 0; i < n; ++i) trial[i] = chi[i] - step * grad[i];
      renormalize(trial);
      const double trial_energy = energy_of(trial);
      if (trial_energy < energy) {
        const double delta = energy - trial_energy;
        chi = std::move(trial);
        energy = trial_energy;
        result.energy_trace.push_back(energy);
        step *= 1.5;
        accepted = true;
        if (delta < opts.tolerance) converged = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // line search exhausted: stationary to machine precision
      converged = true;
      break;
    }
    if (converged) break;
  }

  ScalarField rho(g);
  for (std::size_t i = 0; i < n; ++i) rho.values[i] = chi[i] * chi[i];
  result.density = DensityField(g, std::move(rho), n_particles, 1e-8);
  result.energy = energy;
  result.converged = converged;
  result.iterations = result.energy_trace.size() - 1; // accepted steps
  return result;
}

} // namespace ofke
