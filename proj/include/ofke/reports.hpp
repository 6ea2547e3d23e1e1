#pragma once

#include <string>

#include "ofke/bounds.hpp"
#include "ofke/pair_decomposition.hpp"
#include "ofke/variational.hpp"

namespace ofke {

enum class ReportFormat { Json, Csv, Text };

/// 12 significant digits, the fixed decimal rendering used by every report.
/// Reparsing and reformatting a value reproduces the same string.
std::string format_sig12(double v);

/// Reproducibility header carried by every report: the resolved defaults.
struct RunConfigEcho {
  std::string command;
  std::string source; // system name or density file path
  std::map<std::string, double> grid;   // r_max/a/b/n as applicable
  std::map<std::string, double> coeffs; // c_f_sq, c_lt, c_1d, C, q, ...
};

std::string render_bound_report(const BoundReport& r, const RunConfigEcho& cfg,
                                ReportFormat fmt);
std::string render_decomposition_report(const DecompositionReport& r,
                                        const RunConfigEcho& cfg,
                                        ReportFormat fmt);
std::string render_fit_report(const QFitResult& r, const RunConfigEcho& cfg,
                              ReportFormat fmt);

struct EvalReport {
  std::string system;
  std::map<std::string, double> params;
  double c = 0.0;
  double q = 0.0;
  FunctionalBreakdown breakdown;
  std::optional<double> t_exact;
};
std::string render_eval_report(const EvalReport& r, const RunConfigEcho& cfg,
                               ReportFormat fmt);

struct SolveReport {
  double energy = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  double n_particles = 0.0;
  double c = 0.0;
  double q = 0.0;
};
std::string render_solve_report(const SolveReport& r, const RunConfigEcho& cfg,
                                ReportFormat fmt);

} // namespace ofke
