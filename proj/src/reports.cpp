#include "ofke/reports.hpp"

#include <cstdio>
#include <sstream>

namespace ofke {

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

namespace {

std::string json_map(const std::map<std::string, double>& m) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) out << ", ";
    first = false;
    out << '"' << k << "\": " << format_sig12(v);
  }
  out << "}";
  return out.str();
}

std::string config_json(const RunConfigEcho& cfg) {
  std::ostringstream out;
  out << "\"config\": {\"command\": \"" << cfg.command << "\", \"source\": \""
      << cfg.source << "\", \"grid\": " << json_map(cfg.grid)
      << ", \"coefficients\": " << json_map(cfg.coeffs) << "}";
  return out.str();
}

void config_comment(std::ostringstream& out, const RunConfigEcho& cfg) {
  out << "# command=" << cfg.command << " source=" << cfg.source << "\n# grid:";
  for (const auto& [k, v] : cfg.grid) out << ' ' << k << '=' << format_sig12(v);
  out << "\n# coefficients:";
  for (const auto& [k, v] : cfg.coeffs) {
    out << ' ' << k << '=' << format_sig12(v);
  }
  out << '\n';
}

void config_text(std::ostringstream& out, const RunConfigEcho& cfg) {
  out << "command: " << cfg.command << "\nsource: " << cfg.source << "\ngrid:";
  for (const auto& [k, v] : cfg.grid) out << ' ' << k << '=' << format_sig12(v);
  out << "\ncoefficients:";
  for (const auto& [k, v] : cfg.coeffs) {
    out << ' ' << k << '=' << format_sig12(v);
  }
  out << '\n';
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

} // namespace

std::string render_bound_report(const BoundReport& r, const RunConfigEcho& cfg,
                                ReportFormat fmt) {
  std::ostringstream out;
  const std::string zum = r.zumbach ? format_sig12(*r.zumbach) : "null";
  switch (fmt) {
    case ReportFormat::Json:
      out << "{" << config_json(cfg) << ",\n"
          << "\"system\": \"" << r.system << "\",\n"
          << "\"params\": " << json_map(r.params) << ",\n"
          << "\"t_exact\": " << format_sig12(r.t_exact) << ",\n"
          << "\"lower_lt\": " << format_sig12(r.lower_lt) << ",\n"
          << "\"upper_tfw\": " << format_sig12(r.upper_tfw) << ",\n"
          << "\"zumbach\": " << zum << ",\n"
          << "\"margin_lower\": " << format_sig12(r.margin_lower) << ",\n"
          << "\"margin_upper\": " << format_sig12(r.margin_upper) << ",\n"
          << "\"chain_ok\": [" << bool_str(r.chain_ok[0]) << ", "
          << bool_str(r.chain_ok[1]) << ", " << bool_str(r.chain_ok[2])
          << "]}\n";
      break;
    case ReportFormat::Csv:
      config_comment(out, cfg);
      out << "system,t_exact,lower_lt,upper_tfw,zumbach,margin_lower,"
             "margin_upper,chain_lower,chain_upper,chain_zumbach\n";
      out << r.system << ',' << format_sig12(r.t_exact) << ','
          << format_sig12(r.lower_lt) << ',' << format_sig12(r.upper_tfw)
          << ',' << (r.zumbach ? format_sig12(*r.zumbach) : "") << ','
          << format_sig12(r.margin_lower) << ','
          << format_sig12(r.margin_upper) << ',' << bool_str(r.chain_ok[0])
          << ',' << bool_str(r.chain_ok[1]) << ',' << bool_str(r.chain_ok[2])
          << '\n';
      break;
    case ReportFormat::Text:
      config_text(out, cfg);
      out << "system: " << r.system << '\n'
          << "t_exact:      " << format_sig12(r.t_exact) << '\n'
          << "lower_lt:     " << format_sig12(r.lower_lt) << '\n'
          << "upper_tfw:    " << format_sig12(r.upper_tfw) << '\n'
          << "zumbach:      " << (r.zumbach ? format_sig12(*r.zumbach) : "n/a")
          << '\n'
          << "margin_lower: " << format_sig12(r.margin_lower) << '\n'
          << "margin_upper: " << format_sig12(r.margin_upper) << '\n'
          << "chain_ok: lower<=exact " << bool_str(r.chain_ok[0])
          << ", exact<=upper " << bool_str(r.chain_ok[1])
          << ", upper<=zumbach " << bool_str(r.chain_ok[2]) << '\n';
      break;
  }
  return out.str();
}

std::string render_decomposition_report(const DecompositionReport& r,
                                        const RunConfigEcho& cfg,
                                        ReportFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case ReportFormat::Json:
      out << "{" << config_json(cfg) << ",\n"
          << "\"system\": \"" << r.system << "\",\n"
          << "\"grid\": {\"n1\": " << r.n1 << ", \"n2\": " << r.n2 << "},\n"
          << "\"multivariate\": " << format_sig12(r.multivariate) << ",\n"
          << "\"weizsacker\": " << format_sig12(r.weizsacker) << ",\n"
          << "\"info\": " << format_sig12(r.info) << ",\n"
          << "\"residual\": " << format_sig12(r.residual) << ",\n"
          << "\"masked_mass\": " << format_sig12(r.masked_mass) << "}\n";
      break;
    case ReportFormat::Csv:
      config_comment(out, cfg);
      out << "system,n1,n2,multivariate,weizsacker,info,residual,masked_mass\n"
          << r.system << ',' << r.n1 << ',' << r.n2 << ','
          << format_sig12(r.multivariate) << ',' << format_sig12(r.weizsacker)
          << ',' << format_sig12(r.info) << ',' << format_sig12(r.residual)
          << ',' << format_sig12(r.masked_mass) << '\n';
      break;
    case ReportFormat::Text:
      config_text(out, cfg);
      out << "system: " << r.system << " (lattice " << r.n2 << "x" << r.n2
          << ")\n"
          << "multivariate: " << format_sig12(r.multivariate) << '\n'
          << "weizsacker:   " << format_sig12(r.weizsacker) << '\n'
          << "info:         " << format_sig12(r.info) << '\n'
          << "residual:     " << format_sig12(r.residual) << '\n'
          << "masked_mass:  " << format_sig12(r.masked_mass) << '\n';
      break;
  }
  return out.str();
}

std::string render_fit_report(const QFitResult& r, const RunConfigEcho& cfg,
                              ReportFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case ReportFormat::Json: {
      out << "{" << config_json(cfg) << ",\n"
          << "\"q_star\": " << format_sig12(r.q_star) << ",\n"
          << "\"C\": " << format_sig12(r.c_used) << ",\n"
          << "\"rms_error\": " << format_sig12(r.rms_error) << ",\n"
          << "\"rms_at_q0\": " << format_sig12(r.rms_at_q0) << ",\n"
          << "\"rms_at_q1\": " << format_sig12(r.rms_at_q1) << ",\n"
          << "\"per_system\": [";
      for (std::size_t i = 0; i < r.per_system.size(); ++i) {
        const auto& e = r.per_system[i];
        if (i) out << ", ";
        out << "{\"name\": \"" << e.name
            << "\", \"t_exact\": " << format_sig12(e.t_exact)
            << ", \"t_model\": " << format_sig12(e.t_model)
            << ", \"error\": " << format_sig12(e.error) << "}";
      }
      out << "]}\n";
      break;
    }
    case ReportFormat::Csv:
      config_comment(out, cfg);
      out << "# q_star=" << format_sig12(r.q_star)
          << " C=" << format_sig12(r.c_used)
          << " rms_error=" << format_sig12(r.rms_error)
          << " rms_at_q0=" << format_sig12(r.rms_at_q0)
          << " rms_at_q1=" << format_sig12(r.rms_at_q1) << '\n';
      out << "name,t_exact,t_model,error\n";
      for (const auto& e : r.per_system) {
        out << e.name << ',' << format_sig12(e.t_exact) << ','
            << format_sig12(e.t_model) << ',' << format_sig12(e.error) << '\n';
      }
      break;
    case ReportFormat::Text:
      config_text(out, cfg);
      out << "q_star: " << format_sig12(r.q_star) << '\n'
          << "rms_error: " << format_sig12(r.rms_error)
          << " (q=0: " << format_sig12(r.rms_at_q0)
          << ", q=1: " << format_sig12(r.rms_at_q1) << ")\n";
      for (const auto& e : r.per_system) {
        out << "  " << e.name << ": t_exact=" << format_sig12(e.t_exact)
            << " t_model=" << format_sig12(e.t_model)
            << " error=" << format_sig12(e.error) << '\n';
      }
      break;
  }
  return out.str();
}

std::string render_eval_report(const EvalReport& r, const RunConfigEcho& cfg,
                               ReportFormat fmt) {
  std::ostringstream out;
  const std::string texact =
      r.t_exact ? format_sig12(*r.t_exact) : std::string("null");
  switch (fmt) {
    case ReportFormat::Json:
      out << "{" << config_json(cfg) << ",\n"
          << "\"system\": \"" << r.system << "\",\n"
          << "\"params\": " << json_map(r.params) << ",\n"
          << "\"C\": " << format_sig12(r.c) << ",\n"
          << "\"q\": " << format_sig12(r.q) << ",\n"
          << "\"tf_term\": " << format_sig12(r.breakdown.tf_term) << ",\n"
          << "\"weizsacker_term\": "
          << format_sig12(r.breakdown.weizsacker_term) << ",\n"
          << "\"total\": " << format_sig12(r.breakdown.total) << ",\n"
          << "\"t_exact\": " << texact << "}\n";
      break;
    case ReportFormat::Csv:
      config_comment(out, cfg);
      out << "system,C,q,tf_term,weizsacker_term,total,t_exact\n"
          << r.system << ',' << format_sig12(r.c) << ',' << format_sig12(r.q)
          << ',' << format_sig12(r.breakdown.tf_term) << ','
          << format_sig12(r.breakdown.weizsacker_term) << ','
          << format_sig12(r.breakdown.total) << ','
          << (r.t_exact ? format_sig12(*r.t_exact) : "") << '\n';
      break;
    case ReportFormat::Text:
      config_text(out, cfg);
      out << "system: " << r.system << '\n'
          << "tf_term:         " << format_sig12(r.breakdown.tf_term) << '\n'
          << "weizsacker_term: " << format_sig12(r.breakdown.weizsacker_term)
          << '\n'
          << "total:           " << format_sig12(r.breakdown.total) << '\n'
          << "t_exact:         "
          << (r.t_exact ? format_sig12(*r.t_exact) : "n/a") << '\n';
      break;
  }
  return out.str();
}

std::string render_solve_report(const SolveReport& r, const RunConfigEcho& cfg,
                                ReportFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case ReportFormat::Json:
      out << "{" << config_json(cfg) << ",\n"
          << "\"energy\": " << format_sig12(r.energy) << ",\n"
          << "\"converged\": " << bool_str(r.converged) << ",\n"
          << "\"iterations\": " << r.iterations << ",\n"
          << "\"n_particles\": " << format_sig12(r.n_particles) << ",\n"
          << "\"C\": " << format_sig12(r.c) << ",\n"
          << "\"q\": " << format_sig12(r.q) << "}\n";
      break;
    case ReportFormat::Csv:
      config_comment(out, cfg);
      out << "energy,converged,iterations,n_particles,C,q\n"
          << format_sig12(r.energy) << ',' << bool_str(r.converged) << ','
          << r.iterations << ',' << format_sig12(r.n_particles) << ','
          << format_sig12(r.c) << ',' << format_sig12(r.q) << '\n';
      break;
    case ReportFormat::Text:
      config_text(out, cfg);
      out << "energy: " << format_sig12(r.energy) << '\n'
          << "converged: " << bool_str(r.converged) << " after "
          << r.iterations << " accepted steps\n";
      break;
  }
  return out.str();
}

} // namespace ofke
