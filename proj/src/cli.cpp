#include "gcfrac/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gcfrac/errors.hpp"
#include "gcfrac/fracint.hpp"
#include "gcfrac/kernel.hpp"
#include "gcfrac/report.hpp"

namespace gcfrac::cli {

using report::Json;
using report::number;

namespace {

const char* format_name(Format f) {
  switch (f) {
    case Format::Table: return "table";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "table";
}

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw ConfigError("unknown output format '" + s + "' (table, json, csv)");
}

double parse_double(const std::string& key, const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("value of '" + key + "' is not a number: " + s);
  return v;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Json spec_json(const RunSpec& s) {
  Json j;
  if (!s.f.empty()) j["f"] = s.f;
  if (!s.g.empty()) j["g"] = s.g;
  j["kernel"] = s.kernel;
  j["alpha"] = s.alpha;
  if (s.t) j["t"] = *s.t;
  if (s.a) j["a"] = *s.a;
  if (s.b) j["b"] = *s.b;
  if (s.x) j["x"] = *s.x;
  j["format"] = format_name(s.format);
  return j;
}

Json numeric_json(const NumericConfig& c) {
  return Json{{"eps0", c.eps0},
              {"step_ratio", c.step_ratio},
              {"max_steps", c.max_steps},
              {"tol_rel", c.tol_rel},
              {"richardson_depth", c.richardson_depth}};
}

Json quad_json(const QuadConfig& c) {
  return Json{{"tol_abs", c.tol_abs},
              {"tol_rel", c.tol_rel},
              {"max_subdivisions", c.max_subdivisions},
              {"endpoint_singularity", c.endpoint_singularity}};
}

Json document(const std::string& command, Json spec, Json results, Json summary) {
  Json j;
  j["command"] = command;
  j["spec"] = std::move(spec);
  j["results"] = std::move(results);
  j["summary"] = std::move(summary);
  return j;
}

Json nullable(std::optional<double> v) {
  return v && std::isfinite(*v) ? Json(*v) : Json(nullptr);
}

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw ConfigError(std::string("missing required option ") + flag);
  return *v;
}

Kernel load_kernel(const RunSpec& spec) { return Kernel::from_spec(spec.kernel, spec.kernel_start); }

/// Kernel must be usable on [lo, hi]: lo at or after its validity start and
/// k > 0, k' != 0 at the validation samples.
void require_valid_kernel(const Kernel& kernel, double lo, double hi) {
  if (lo < kernel.validity_start())
    throw DomainError("interval starts at " + number(lo) + ", before the kernel validity start " +
                      number(kernel.validity_start()));
  if (!(lo < hi)) return;
  const KernelValidationReport rep = validate_kernel(kernel, lo, hi, 64);
  if (rep.passed()) return;
  const KernelViolation& v = rep.violations.front();
  throw KernelError("kernel '" + kernel.name() + "' fails validation on [" + number(lo) + ", " +
                    number(hi) + "]: " + std::to_string(rep.violations.size()) +
                    " violation(s), first at t = " + number(v.t) + " (" + v.reason + ")");
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << e.render() << '\n';
    return kParseError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kHypothesisFailed;
  } catch (const QuadratureError& e) {
    err << "quadrature failed: " << e.what() << '\n';
    return kQuadratureFailed;
  } catch (const KernelError& e) {
    err << "kernel error: " << e.what() << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

void print_witness(const RunSpec& spec, const TheoremReport& r, double lhs, double rhs,
                   int code, std::ostream& out) {
  switch (spec.format) {
    case Format::Json: {
      Json res = Json::array();
      res.push_back(report::to_json(r));
      Json summary{{"c", nullable(r.witness)},
                   {"residual", r.max_residual},
                   {"lhs", lhs},
                   {"rhs", rhs},
                   {"verdict", r.passed ? "pass" : "fail"},
                   {"exit_code", code}};
      out << document(spec.command, spec_json(spec), std::move(res), std::move(summary)).dump(2)
          << '\n';
      break;
    }
    case Format::Csv:
      out << "c,residual,lhs,rhs,verdict\n"
          << number(*r.witness) << ',' << number(r.max_residual) << ',' << number(lhs) << ','
          << number(rhs) << ',' << (r.passed ? "pass" : "fail") << '\n';
      break;
    case Format::Table:
      out << "identity  " << r.identity << '\n'
          << "c         " << number(*r.witness) << '\n'
          << "D f(c)    " << number(lhs) << '\n'
          << "target    " << number(rhs) << '\n'
          << "residual  " << number(r.max_residual) << "  (tolerance " << number(r.tolerance)
          << ")\n";
      for (const std::string& n : r.notes) out << "note      " << n << '\n';
      break;
  }
}

}  // namespace

void apply_config_text(RunSpec& spec, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto d = [&] { return parse_double(key, value); };
    auto i = [&] { return static_cast<int>(parse_double(key, value)); };
    if (key == "kernel") spec.kernel = value;
    else if (key == "kernel_start") spec.kernel_start = d();
    else if (key == "alpha") spec.alpha = d();
    else if (key == "format") spec.format = parse_format(value);
    else if (key == "eps0") spec.numeric.eps0 = d();
    else if (key == "step_ratio") spec.numeric.step_ratio = d();
    else if (key == "max_steps") spec.numeric.max_steps = i();
    else if (key == "tol_rel") spec.numeric.tol_rel = d();
    else if (key == "richardson_depth") spec.numeric.richardson_depth = i();
    else if (key == "quad_tol_abs") spec.quad.tol_abs = d();
    else if (key == "quad_tol_rel") spec.quad.tol_rel = d();
    else if (key == "max_subdivisions") spec.quad.max_subdivisions = i();
    else if (key == "endpoint_singularity") spec.quad.endpoint_singularity = (value == "true" || value == "1");
    else if (key == "match_tol") spec.witness.match_tol = d();
    else throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

int cmd_deriv(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const ScalarFunction f = ScalarFunction::parse(spec.f);
    const Kernel kernel = load_kernel(spec);
    const FracOrder alpha(spec.alpha);
    const double t = require(spec.t, "--t");
    spec.numeric.validate();
    if (!(t > kernel.validity_start()))
      throw DomainError("t must exceed the kernel validity start " + number(kernel.validity_start()));
    require_valid_kernel(kernel, kernel.validity_start(), t);

    const double closed = d_alpha_closed(f, kernel, alpha, t);
    const LimitEstimate lim = d_alpha_limit(f, kernel, alpha, t, spec.numeric);
    const double discrepancy = std::fabs(lim.value - closed);
    const int code = lim.converged ? kOk : kNotConverged;

    switch (spec.format) {
      case Format::Json: {
        Json results = Json::array();
        results.push_back(Json{{"route", "closed"},
                               {"formula", "k(t)^(1-alpha) / k'(t) * f'(t)"},
                               {"value", closed}});
        results.push_back(Json{{"route", "limit"},
                               {"formula", "Richardson-extrapolated difference quotient"},
                               {"value", nullable(lim.value)},
                               {"error_estimate", nullable(lim.error_estimate)},
                               {"converged", lim.converged},
                               {"steps", lim.steps_used.size()},
                               {"tol_rel", spec.numeric.tol_rel}});
        Json s = spec_json(spec);
        s["numeric"] = numeric_json(spec.numeric);
        out << document("deriv", std::move(s), std::move(results),
                        Json{{"discrepancy", nullable(discrepancy)},
                             {"converged", lim.converged},
                             {"exit_code", code}})
                   .dump(2)
            << '\n';
        break;
      }
      case Format::Csv:
        out << "route,value,error_estimate,converged\n"
            << "closed," << number(closed) << ",0,true\n"
            << "limit," << number(lim.value) << ',' << number(lim.error_estimate) << ','
            << (lim.converged ? "true" : "false") << '\n';
        break;
      case Format::Table:
        out << "closed form  " << number(closed) << '\n'
            << "limit        " << number(lim.value) << "  (error estimate "
            << number(lim.error_estimate) << ", " << lim.steps_used.size() << " steps, "
            << (lim.converged ? "converged" : "NOT converged") << ")\n"
            << "discrepancy  " << number(discrepancy) << '\n';
        break;
    }
    if (!lim.converged) err << "limit did not converge: " << lim.note << '\n';
    return code;
  });
}

int cmd_integ(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const ScalarFunction f = ScalarFunction::parse(spec.f);
    const Kernel kernel = load_kernel(spec);
    const FracOrder alpha(spec.alpha);
    const double a = require(spec.a, "--a");
    const double b = require(spec.b, "--b");
    spec.quad.validate();
    require_valid_kernel(kernel, std::min(a, b), std::max(a, b));

    const QuadratureResult r = i_alpha(f, kernel, alpha, a, b, spec.quad);
    const int code = r.converged ? kOk : kQuadratureFailed;
    const char* status = r.status == QuadStatus::Converged         ? "converged"
                         : r.status == QuadStatus::BudgetExhausted ? "budget_exhausted"
                                                                   : "divergent";
    switch (spec.format) {
      case Format::Json: {
        Json results = Json::array();
        results.push_back(Json{{"formula", "integral of k'(x) f(x) / k(x)^(1-alpha) over [a, b]"},
                               {"value", r.value},
                               {"error_estimate", r.error_estimate},
                               {"subdivisions", r.subdivisions},
                               {"status", status},
                               {"substituted", r.substituted}});
        Json s = spec_json(spec);
        s["quadrature"] = quad_json(spec.quad);
        out << document("integ", std::move(s), std::move(results),
                        Json{{"converged", r.converged}, {"exit_code", code}})
                   .dump(2)
            << '\n';
        break;
      }
      case Format::Csv:
        out << "value,error_estimate,subdivisions,status,substituted\n"
            << number(r.value) << ',' << number(r.error_estimate) << ',' << r.subdivisions << ','
            << status << ',' << (r.substituted ? "true" : "false") << '\n';
        break;
      case Format::Table:
        out << "value         " << number(r.value) << '\n'
            << "error         " << number(r.error_estimate) << '\n'
            << "subdivisions  " << r.subdivisions << '\n'
            << "status        " << status << '\n';
        if (r.substituted)
          out << "note          singular endpoint: integrated in u = k(x)^alpha / alpha\n";
        break;
    }
    if (!r.converged) err << "integral did not converge: " << r.note << '\n';
    return code;
  });
}

int cmd_verify(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    SuiteGrid grid = SuiteGrid::defaults();
    const auto& known = suite_theorems();
    for (const std::string& id : spec.theorems) {
      if (std::find(known.begin(), known.end(), id) == known.end())
        throw ConfigError("unknown theorem '" + id + "'");
      grid.theorems.insert(id);
    }
    if (!spec.kernels.empty()) grid.kernels = spec.kernels;
    if (!spec.alpha_grid.empty()) {
      for (double a : spec.alpha_grid) (void)FracOrder(a);
      grid.alphas = spec.alpha_grid;
    }
    grid.orientation = spec.orientation;
    grid.numeric = spec.numeric;
    grid.numeric.validate();

    const std::vector<TheoremReport> reports = run_full_suite(grid);
    const auto per = report::summarize(reports);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.passed ? 0 : 1;
    const int code = failed == 0 ? kOk : kVerifyFailed;

    switch (spec.format) {
      case Format::Json: {
        Json results = Json::array();
        for (const auto& r : reports) results.push_back(report::to_json(r));
        Json per_theorem;
        for (const auto& [id, s] : per)
          per_theorem[id] = Json{{"passed", s.passed}, {"failed", s.failed}, {"max_residual", s.max_residual}};
        Json s;
        s["theorems"] = grid.theorems.empty() ? Json(known) : Json(grid.theorems);
        s["kernels"] = grid.kernels;
        s["functions"] = grid.functions;
        s["alphas"] = grid.alphas;
        s["points"] = grid.points;
        s["intervals"] = Json::array();
        for (const auto& iv : grid.intervals) s["intervals"].push_back(Json::array({iv.a, iv.b}));
        s["orientation"] = grid.orientation == QuotientOrientation::Printed ? "printed" : "consistent";
        s["numeric"] = numeric_json(grid.numeric);
        s["quadrature"] = quad_json(grid.quad);
        out << document("verify", std::move(s), std::move(results),
                        Json{{"total", reports.size()},
                             {"passed", reports.size() - failed},
                             {"failed", failed},
                             {"per_theorem", std::move(per_theorem)},
                             {"all_passed", failed == 0}})
                   .dump(2)
            << '\n';
        break;
      }
      case Format::Csv:
        report::write_csv(out, reports);
        break;
      case Format::Table:
        report::write_table(out, reports);
        out << '\n';
        for (const auto& [id, s] : per) {
          char line[160];
          std::snprintf(line, sizeof line, "summary %-20s max residual %10.3e  %zu/%zu pass\n",
                        id.c_str(), s.max_residual, s.passed, s.passed + s.failed);
          out << line;
        }
        out << (failed == 0 ? "all " + std::to_string(reports.size()) + " reports pass\n"
                            : std::to_string(failed) + " of " + std::to_string(reports.size()) +
                                  " reports FAIL\n");
        break;
    }
    return code;
  });
}

int cmd_table(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Kernel kernel = load_kernel(spec);
    const FracOrder alpha(spec.alpha);
    const double x = require(spec.x, "--x");
    const double pa = spec.a.value_or(1.0);
    const double pb = spec.b.value_or(1.0);
    spec.numeric.validate();
    const auto rows = special_table(alpha, kernel, x, pa, pb);

    struct Line {
      std::optional<double> closed, limit;
      bool converged = false;
      std::string error;
    };
    std::vector<Line> lines;
    for (const SpecialRow& row : rows) {
      Line l;
      l.closed = row.value;
      l.error = row.error;
      try {
        const LimitEstimate lim =
            d_alpha_limit(ScalarFunction::parse(row.expression), kernel, alpha, x, spec.numeric);
        l.limit = lim.value;
        l.converged = lim.converged;
      } catch (const std::exception& e) {
        if (l.error.empty()) l.error = std::string("limit: ") + e.what();
      }
      lines.push_back(l);
    }

    switch (spec.format) {
      case Format::Json: {
        Json results = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
          Json r{{"row", i + 1},
                 {"function", rows[i].label},
                 {"expression", rows[i].expression},
                 {"closed", nullable(lines[i].closed)},
                 {"limit", nullable(lines[i].limit)},
                 {"limit_converged", lines[i].converged}};
          if (lines[i].closed && lines[i].limit)
            r["discrepancy"] = std::fabs(*lines[i].closed - *lines[i].limit);
          if (!lines[i].error.empty()) r["error"] = lines[i].error;
          results.push_back(std::move(r));
        }
        Json s = spec_json(spec);
        s["numeric"] = numeric_json(spec.numeric);
        out << document("table", std::move(s), std::move(results), Json{{"rows", rows.size()}}).dump(2)
            << '\n';
        break;
      }
      case Format::Csv:
        out << "row,function,expression,closed,limit,discrepancy,error\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const auto& l = lines[i];
          out << i + 1 << ',' << report::csv_field(rows[i].label) << ','
              << report::csv_field(rows[i].expression) << ','
              << (l.closed ? number(*l.closed) : "") << ',' << (l.limit ? number(*l.limit) : "")
              << ',' << (l.closed && l.limit ? number(std::fabs(*l.closed - *l.limit)) : "")
              << ',' << report::csv_field(l.error) << '\n';
        }
        break;
      case Format::Table: {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-3s %-12s %-24s %-24s %-12s\n", "#", "function",
                      "closed", "limit", "discrepancy");
        out << buf;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const auto& l = lines[i];
          if (!l.closed) {
            std::snprintf(buf, sizeof buf, "%-3zu %-12s [domain error: %s]\n", i + 1,
                          rows[i].label.c_str(), l.error.c_str());
          } else {
            std::snprintf(buf, sizeof buf, "%-3zu %-12s %-24s %-24s %-12s\n", i + 1,
                          rows[i].label.c_str(), number(*l.closed).c_str(),
                          l.limit ? number(*l.limit).c_str() : "[n/a]",
                          l.limit ? number(std::fabs(*l.closed - *l.limit)).c_str() : "");
          }
          out << buf;
        }
        break;
      }
    }
    return kOk;
  });
}

int cmd_rolle(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const ScalarFunction f = ScalarFunction::parse(spec.f);
    const Kernel kernel = load_kernel(spec);
    const FracOrder alpha(spec.alpha);
    const double a = require(spec.a, "--a");
    const double b = require(spec.b, "--b");
    require_valid_kernel(kernel, a, b);
    const TheoremReport r = rolle_find_c(f, kernel, alpha, a, b, spec.witness);
    const double lhs = d_alpha_closed(f, kernel, alpha, *r.witness);
    const int code = r.passed ? kOk : kNotConverged;
    print_witness(spec, r, lhs, 0.0, code, out);
    return code;
  });
}

int cmd_mvt(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const ScalarFunction f = ScalarFunction::parse(spec.f);
    const Kernel kernel = load_kernel(spec);
    const FracOrder alpha(spec.alpha);
    const double a = require(spec.a, "--a");
    const double b = require(spec.b, "--b");
    require_valid_kernel(kernel, a, b);
    const TheoremReport r = mvt_find_c(f, kernel, alpha, a, b, spec.witness);
    const double lhs = d_alpha_closed(f, kernel, alpha, *r.witness);
    const double rhs = (f.value(b) - f.value(a)) / (kernel_order_antiderivative(kernel, alpha, b) -
                                                    kernel_order_antiderivative(kernel, alpha, a));
    const int code = r.passed ? kOk : kNotConverged;
    print_witness(spec, r, lhs, rhs, code, out);
    return code;
  });
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.command == "deriv") return cmd_deriv(spec, out, err);
  if (spec.command == "integ") return cmd_integ(spec, out, err);
  if (spec.command == "verify") return cmd_verify(spec, out, err);
  if (spec.command == "table") return cmd_table(spec, out, err);
  if (spec.command == "rolle") return cmd_rolle(spec, out, err);
  if (spec.command == "mvt") return cmd_mvt(spec, out, err);
  err << "error: unknown command '" << spec.command << "'\n";
  return kParseError;
}

namespace {

struct Flags {
  std::optional<std::string> f, g, kernel, format, config;
  std::optional<double> kernel_start, alpha, t, a, b, x;
  std::optional<double> eps0, step_ratio, tol_rel, quad_tol_abs, quad_tol_rel, match_tol;
  std::optional<int> max_steps, richardson_depth, max_subdivisions;
  std::vector<std::string> theorems, kernels;
  std::vector<double> alpha_grid;
  std::string orientation = "consistent";
};

void add_common(CLI::App* sub, Flags& fl) {
  sub->add_option("--kernel", fl.kernel, "identity | power:p | exp | log1p | expression");
  sub->add_option("--kernel-start", fl.kernel_start, "validity start of an expression kernel");
  sub->add_option("--alpha", fl.alpha, "order in (0, 1]");
  sub->add_option("--format", fl.format, "table | json | csv");
  sub->add_option("--config", fl.config, "key = value file with defaults");
  sub->add_option("--eps0", fl.eps0);
  sub->add_option("--step-ratio", fl.step_ratio);
  sub->add_option("--max-steps", fl.max_steps);
  sub->add_option("--tol-rel", fl.tol_rel);
  sub->add_option("--richardson-depth", fl.richardson_depth);
}

void add_quad(CLI::App* sub, Flags& fl) {
  sub->add_option("--quad-tol-abs", fl.quad_tol_abs);
  sub->add_option("--quad-tol-rel", fl.quad_tol_rel);
  sub->add_option("--max-subdivisions", fl.max_subdivisions);
}

RunSpec build_spec(const std::string& command, const Flags& fl) {
  RunSpec s;
  s.command = command;
  if (fl.config) {
    std::ifstream in(*fl.config);
    if (!in) throw ConfigError("cannot read config file '" + *fl.config + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_text(s, buf.str());
  }
  if (fl.f) s.f = *fl.f;
  if (fl.g) s.g = *fl.g;
  if (fl.kernel) s.kernel = *fl.kernel;
  if (fl.kernel_start) s.kernel_start = *fl.kernel_start;
  if (fl.alpha) s.alpha = *fl.alpha;
  if (fl.format) s.format = parse_format(*fl.format);
  if (fl.t) s.t = fl.t;
  if (fl.a) s.a = fl.a;
  if (fl.b) s.b = fl.b;
  if (fl.x) s.x = fl.x;
  if (fl.eps0) s.numeric.eps0 = *fl.eps0;
  if (fl.step_ratio) s.numeric.step_ratio = *fl.step_ratio;
  if (fl.max_steps) s.numeric.max_steps = *fl.max_steps;
  if (fl.tol_rel) s.numeric.tol_rel = *fl.tol_rel;
  if (fl.richardson_depth) s.numeric.richardson_depth = *fl.richardson_depth;
  if (fl.quad_tol_abs) s.quad.tol_abs = *fl.quad_tol_abs;
  if (fl.quad_tol_rel) s.quad.tol_rel = *fl.quad_tol_rel;
  if (fl.max_subdivisions) s.quad.max_subdivisions = *fl.max_subdivisions;
  if (fl.match_tol) s.witness.match_tol = *fl.match_tol;
  s.theorems = fl.theorems;
  s.kernels = fl.kernels;
  s.alpha_grid = fl.alpha_grid;
  if (fl.orientation == "printed" || fl.orientation == "paper") {
    s.orientation = QuotientOrientation::Printed;
  } else if (fl.orientation != "consistent") {
    throw ConfigError("orientation must be 'consistent' or 'printed'");
  }
  return s;
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernel-parameterised conformable fractional derivative and integral"};
  app.name("gcfrac");
  app.require_subcommand(1);
  Flags fl;

  auto* deriv = app.add_subcommand("deriv", "D^alpha f(t) by closed form and by the limit");
  deriv->add_option("--f", fl.f, "function of one variable")->required();
  deriv->add_option("--t", fl.t, "evaluation point")->required();
  add_common(deriv, fl);

  auto* integ = app.add_subcommand("integ", "I^alpha f over [a, b]");
  integ->add_option("--f", fl.f)->required();
  integ->add_option("--a", fl.a)->required();
  integ->add_option("--b", fl.b)->required();
  add_common(integ, fl);
  add_quad(integ, fl);

  auto* verify = app.add_subcommand("verify", "run the theorem verification suite");
  verify->add_option("--theorem", fl.theorems, "restrict to theorem ids")->delimiter(',');
  verify->add_option("--kernel", fl.kernels, "restrict kernels")->delimiter(',');
  verify->add_option("--alpha-grid", fl.alpha_grid, "orders to check")->delimiter(',');
  verify->add_option("--orientation", fl.orientation, "quotient rule: consistent | printed");
  verify->add_option("--format", fl.format, "table | json | csv");
  verify->add_option("--config", fl.config);
  verify->add_option("--eps0", fl.eps0);
  verify->add_option("--step-ratio", fl.step_ratio);
  verify->add_option("--max-steps", fl.max_steps);
  verify->add_option("--tol-rel", fl.tol_rel);
  verify->add_option("--richardson-depth", fl.richardson_depth);

  auto* table = app.add_subcommand("table", "derivatives of the six special functions");
  table->add_option("--x", fl.x, "evaluation point")->required();
  table->add_option("--a", fl.a, "parameter a (default 1)");
  table->add_option("--b", fl.b, "parameter b (default 1)");
  add_common(table, fl);

  auto* rolle = app.add_subcommand("rolle", "find c with D^alpha f(c) = 0");
  rolle->add_option("--f", fl.f)->required();
  rolle->add_option("--a", fl.a)->required();
  rolle->add_option("--b", fl.b)->required();
  rolle->add_option("--match-tol", fl.match_tol, "allowed |f(a) - f(b)|");
  add_common(rolle, fl);

  auto* mvt = app.add_subcommand("mvt", "find the mean value witness c");
  mvt->add_option("--f", fl.f)->required();
  mvt->add_option("--a", fl.a)->required();
  mvt->add_option("--b", fl.b)->required();
  add_common(mvt, fl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  RunSpec spec;
  try {
    spec = build_spec(command, fl);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return run(spec, out, err);
}

}  // namespace gcfrac::cli
