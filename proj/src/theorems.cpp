#include "gcfrac/theorems.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>

#include "gcfrac/fracint.hpp"
#include "gcfrac/roots.hpp"

namespace gcfrac {

namespace {

std::string num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

TheoremReport make_report(std::string theorem, std::string identity, const ScalarFunction& f,
                          const ScalarFunction* g, const Kernel& kernel, FracOrder alpha,
                          double tol) {
  TheoremReport r;
  r.theorem = std::move(theorem);
  r.identity = std::move(identity);
  r.f = f.source();
  if (g) r.g = g->source();
  r.kernel = kernel.name();
  r.alpha = alpha.value();
  r.tolerance = tol;
  return r;
}

template <class Residual>
void over_points(TheoremReport& r, const std::vector<double>& points, Residual&& residual_at) {
  r.points = points;
  for (double t : points) {
    try {
      r.residuals.push_back(residual_at(t));
    } catch (const std::exception& e) {
      r.notes.push_back("t = " + num(t) + " skipped: " + e.what());
    }
  }
}

double D(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double t) {
  return d_alpha_closed(f, kernel, alpha, t);
}

}  // namespace

void TheoremReport::finalize() {
  max_residual = 0.0;
  bool finite = true;
  for (double r : residuals) {
    finite = finite && std::isfinite(r);
    max_residual = std::max(max_residual, r);
  }
  passed = finite && !residuals.empty() && max_residual <= tolerance;
  if (residuals.empty()) notes.push_back("no point could be evaluated");
}

TheoremReport check_linearity(const ScalarFunction& f, const ScalarFunction& g,
                              const Kernel& kernel, FracOrder alpha, double wf, double wg,
                              const std::vector<double>& points, double tol) {
  auto r = make_report("linearity", "D(wf f + wg g) = wf D f + wg D g", f, &g, kernel, alpha, tol);
  const ScalarFunction combo(ExprTree::constant(wf) * f.expr() + ExprTree::constant(wg) * g.expr());
  over_points(r, points, [&](double t) {
    return std::fabs(D(combo, kernel, alpha, t) - wf * D(f, kernel, alpha, t) -
                     wg * D(g, kernel, alpha, t));
  });
  r.notes.push_back("weights wf = " + num(wf) + ", wg = " + num(wg));
  r.finalize();
  return r;
}

TheoremReport check_power_rule(double n, const Kernel& kernel, FracOrder alpha,
                               const std::vector<double>& points, double tol) {
  const ScalarFunction f(pow(ExprTree::variable("x"), ExprTree::constant(n)));
  auto r = make_report("power", "D(x^n) = k^(1-alpha)/k' n t^(n-1)", f, nullptr, kernel, alpha, tol);
  over_points(r, points, [&](double t) {
    const double lhs = D(f, kernel, alpha, t);
    const double rhs = closed_form_weight(kernel, alpha, t) * n * std::pow(t, n - 1.0);
    const double diff = std::fabs(lhs - rhs);
    return rhs != 0.0 ? diff / std::fabs(rhs) : diff;
  });
  r.notes.push_back("relative residuals, n = " + num(n));
  r.finalize();
  return r;
}

TheoremReport check_product_rule(const ScalarFunction& f, const ScalarFunction& g,
                                 const Kernel& kernel, FracOrder alpha,
                                 const std::vector<double>& points, double tol) {
  auto r = make_report("product", "D(f g) = f D g + g D f", f, &g, kernel, alpha, tol);
  const ScalarFunction fg(f.expr() * g.expr());
  over_points(r, points, [&](double t) {
    return std::fabs(D(fg, kernel, alpha, t) - f.value(t) * D(g, kernel, alpha, t) -
                     g.value(t) * D(f, kernel, alpha, t));
  });
  r.finalize();
  return r;
}

TheoremReport check_quotient_rule(const ScalarFunction& f, const ScalarFunction& g,
                                  const Kernel& kernel, FracOrder alpha,
                                  const std::vector<double>& points,
                                  QuotientOrientation orientation, double tol) {
  const bool printed = orientation == QuotientOrientation::Printed;
  auto r = make_report(printed ? "quotient-printed" : "quotient",
                       printed ? "D(f/g) = (f D g - g D f) / g^2" : "D(f/g) = (g D f - f D g) / g^2",
                       f, &g, kernel, alpha, tol);
  const ScalarFunction q(f.expr() / g.expr());
  std::vector<double> consistent, transposed;
  r.points = points;
  for (double t : points) {
    try {
      const double gt = g.value(t);
      if (std::fabs(gt) < 1e-8) {
        r.notes.push_back("t = " + num(t) + " skipped: |g(t)| too small");
        continue;
      }
      const double lhs = D(q, kernel, alpha, t);
      const double df = D(f, kernel, alpha, t);
      const double dg = D(g, kernel, alpha, t);
      const double ft = f.value(t);
      consistent.push_back(std::fabs(lhs - (gt * df - ft * dg) / (gt * gt)));
      transposed.push_back(std::fabs(lhs - (ft * dg - gt * df) / (gt * gt)));
    } catch (const std::exception& e) {
      r.notes.push_back("t = " + num(t) + " skipped: " + e.what());
    }
  }
  r.residuals = printed ? transposed : consistent;
  if (!transposed.empty())
    r.printed_orientation_residual = *std::max_element(transposed.begin(), transposed.end());
  if (printed && !consistent.empty())
    r.notes.push_back("consistent-orientation max residual " +
                      num(*std::max_element(consistent.begin(), consistent.end())));
  r.finalize();
  return r;
}

TheoremReport check_chain_rule(const ScalarFunction& f, const ScalarFunction& g,
                               const Kernel& kernel, FracOrder alpha,
                               const std::vector<double>& points, double tol) {
  auto r = make_report("chain", "D(f o g)(t) = k^(1-alpha)/k' f'(g(t)) g'(t)", f, &g, kernel,
                       alpha, tol);
  const ScalarFunction fog(compose(f.expr(), g.expr()));
  over_points(r, points, [&](double t) {
    const double rhs = closed_form_weight(kernel, alpha, t) * f.slope(g.value(t)) * g.slope(t);
    return std::fabs(D(fog, kernel, alpha, t) - rhs);
  });
  r.finalize();
  return r;
}

TheoremReport check_equivalence(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                                const std::vector<double>& points, const NumericConfig& cfg,
                                double tol) {
  auto r = make_report("equivalence", "limit quotient = k^(1-alpha)/k' f'", f, nullptr, kernel,
                       alpha, tol);
  int flagged = 0;
  over_points(r, points, [&](double t) -> double {
    const double closed = D(f, kernel, alpha, t);
    const LimitEstimate lim = d_alpha_limit(f, kernel, alpha, t, cfg);
    if (!lim.converged) {
      ++flagged;
      throw std::runtime_error("limit not converged (" + lim.note + ")");
    }
    return std::fabs(lim.value - closed) / (1.0 + std::fabs(closed));
  });
  if (flagged > 0) r.notes.push_back(std::to_string(flagged) + " point(s) flagged non-converged");
  r.finalize();
  return r;
}

namespace {

TheoremReport find_witness(TheoremReport r, const ScalarFunction& f, const Kernel& kernel,
                           FracOrder alpha, double a, double b, double target,
                           const WitnessConfig& cfg) {
  r.a = a;
  r.b = b;
  const auto g = [&](double t) { return D(f, kernel, alpha, t) - target; };
  const RootScan scan = leftmost_root(g, a, b, cfg.scan_intervals, cfg.node_tol, 0.0, true);
  r.witness = scan.x;
  r.points = {scan.x};
  r.residuals = {std::fabs(g(scan.x))};
  if (!scan.bracketed)
    r.notes.push_back("no sign change on the scan grid; witness is the grid argmin");
  r.notes.push_back("target D f(c) = " + num(target));
  r.finalize();
  return r;
}

}  // namespace

TheoremReport rolle_find_c(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                           double a, double b, const WitnessConfig& cfg) {
  if (!(a < b)) throw ConfigError("Rolle needs a < b");
  const double fa = f.value(a);
  const double fb = f.value(b);
  if (std::fabs(fa - fb) > cfg.match_tol)
    throw HypothesisError("Rolle hypothesis f(a) = f(b) fails: f(a) = " + num(fa) +
                          ", f(b) = " + num(fb));
  auto r = make_report("rolle", "D f(c) = 0 for some c in (a, b)", f, nullptr, kernel, alpha,
                       cfg.tolerance);
  return find_witness(std::move(r), f, kernel, alpha, a, b, 0.0, cfg);
}

TheoremReport mvt_find_c(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                         double a, double b, const WitnessConfig& cfg) {
  if (!(a < b)) throw ConfigError("the mean value theorem needs a < b");
  const double den =
      kernel_order_antiderivative(kernel, alpha, b) - kernel_order_antiderivative(kernel, alpha, a);
  if (den == 0.0 || !std::isfinite(den))
    throw HypothesisError("k(b)^alpha/alpha - k(a)^alpha/alpha vanishes");
  const double target = (f.value(b) - f.value(a)) / den;
  auto r = make_report("mvt", "D f(c) = (f(b) - f(a)) / (k(b)^alpha/alpha - k(a)^alpha/alpha)", f,
                       nullptr, kernel, alpha, cfg.tolerance);
  return find_witness(std::move(r), f, kernel, alpha, a, b, target, cfg);
}

ScalarFunction rolle_auxiliary(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                               double a, double b) {
  const double den =
      kernel_order_antiderivative(kernel, alpha, b) - kernel_order_antiderivative(kernel, alpha, a);
  if (den == 0.0) throw HypothesisError("k(b)^alpha/alpha - k(a)^alpha/alpha vanishes");
  const double h = (f.value(b) - f.value(a)) / den;
  const ExprTree k_of_x =
      compose(kernel.function().expr(), ExprTree::variable(f.expr().variable_name()));
  const ExprTree u =
      pow(k_of_x, ExprTree::constant(alpha.value())) / ExprTree::constant(alpha.value());
  return ScalarFunction(f.expr() - ExprTree::constant(h) * u);
}

TheoremReport report_D_of_I(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                            double a, const std::vector<double>& points, const QuadConfig& cfg,
                            double tol) {
  auto r = make_report("d_of_i", "D[I f](t) = f(t)", f, nullptr, kernel, alpha, tol);
  r.a = a;
  over_points(r, points, [&](double t) { return check_D_of_I(f, kernel, alpha, a, t, cfg); });
  r.finalize();
  return r;
}

TheoremReport report_I_of_D(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                            double a, const std::vector<double>& points, const QuadConfig& cfg,
                            double tol) {
  auto r = make_report("i_of_d", "I[D f](t) = f(t) - f(a)", f, nullptr, kernel, alpha, tol);
  r.a = a;
  over_points(r, points, [&](double t) { return check_I_of_D(f, kernel, alpha, a, t, cfg); });
  r.finalize();
  return r;
}

TheoremReport report_parts(const ScalarFunction& f, const ScalarFunction& g, const Kernel& kernel,
                           FracOrder alpha, double a, double b, const QuadConfig& cfg,
                           double tol) {
  auto r = make_report("parts", "I(f D g) = f g |_a^b - I(g D f)", f, &g, kernel, alpha, tol);
  r.a = a;
  r.b = b;
  over_points(r, {b}, [&](double) {
    return integration_by_parts_residual(f, g, kernel, alpha, a, b, cfg);
  });
  r.finalize();
  return r;
}

TheoremReport report_integral_mean_value(const ScalarFunction& f, const ScalarFunction& g,
                                         const Kernel& kernel, FracOrder alpha, double a,
                                         double b, const QuadConfig& cfg, double tol) {
  auto r = make_report("integral_mvt", "I(f g) = f(x0) I(g), m <= xi <= M", f, &g, kernel, alpha,
                       tol);
  r.a = a;
  r.b = b;
  try {
    const MeanValueWitness w = integral_mean_value(f, g, kernel, alpha, a, b, cfg);
    r.witness = w.x0;
    r.xi = w.xi;
    r.points = {w.x0};
    r.residuals = {w.residual, std::max({0.0, w.m - w.xi, w.xi - w.M})};
    if (!w.bracketed) r.notes.push_back("x0 is the grid argmin of |f - xi|");
    r.notes.push_back("m = " + num(w.m) + ", M = " + num(w.M));
  } catch (const std::exception& e) {
    r.notes.push_back(e.what());
  }
  r.finalize();
  return r;
}

TheoremReport report_integral_properties(const ScalarFunction& f, const ScalarFunction& g,
                                         const Kernel& kernel, FracOrder alpha, double a,
                                         double b, double lambda, const QuadConfig& cfg,
                                         double tol) {
  auto r = make_report("integral_properties",
                       "additivity, homogeneity, reversal, splitting, zero width, positivity, "
                       "triangle",
                       f, &g, kernel, alpha, tol);
  r.a = a;
  r.b = b;
  try {
    const IntegralProperties p =
        check_linearity_properties(f, g, kernel, alpha, a, b, 0.5 * (a + b), lambda, cfg);
    r.residuals.assign(p.residuals.begin(), p.residuals.end());
    if (!p.nonnegativity_applies) r.notes.push_back("f takes negative values; positivity vacuous");
  } catch (const std::exception& e) {
    r.notes.push_back(e.what());
  }
  r.finalize();
  return r;
}

const std::vector<std::string>& suite_theorems() {
  static const std::vector<std::string> ids = {
      "equivalence", "linearity",    "power",        "product",       "quotient",
      "chain",       "rolle",        "mvt",          "d_of_i",        "i_of_d",
      "parts",       "integral_mvt", "integral_properties"};
  return ids;
}

SuiteGrid SuiteGrid::defaults() {
  SuiteGrid g;
  g.functions = {"x^2", "sin(x)", "exp(2*x)", "ln(1+x)", "1/(1+x^2)", "x*sin(x)"};
  g.kernels = {"identity", "power:2", "exp", "log1p"};
  g.alphas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  g.points = {0.5, 1.0, 1.5, 2.0, 3.0};
  g.intervals = {{0.5, 2.0}, {0.0, 1.5}};
  g.quad.tol_abs = 1e-12;
  g.quad.tol_rel = 1e-12;
  return g;
}

namespace {

constexpr double kPowerExponents[] = {-1.0, 0.5, 1.0, 2.0, 3.0};

TheoremReport failed_report(const std::string& theorem, const std::string& f,
                            const std::string& kernel, double alpha, const std::string& why) {
  TheoremReport r;
  r.theorem = theorem;
  r.f = f;
  r.kernel = kernel;
  r.alpha = alpha;
  r.notes.push_back(why);
  r.finalize();
  return r;
}

}  // namespace

std::vector<TheoremReport> run_full_suite(const SuiteGrid& grid) {
  std::vector<TheoremReport> out;
  auto wanted = [&](const std::string& id) { return grid.theorems.empty() || grid.theorems.count(id); };

  for (const std::string& kspec : grid.kernels) {
    std::optional<Kernel> kernel;
    try {
      kernel = Kernel::from_spec(kspec);
    } catch (const std::exception& e) {
      out.push_back(failed_report("kernel", "", kspec, 0.0, e.what()));
      continue;
    }

    for (std::size_t fi = 0; fi < grid.functions.size(); ++fi) {
      std::optional<ScalarFunction> f, g;
      try {
        f = ScalarFunction::parse(grid.functions[fi]);
        g = ScalarFunction::parse(grid.functions[(fi + 1) % grid.functions.size()]);
      } catch (const std::exception& e) {
        out.push_back(failed_report("parse", grid.functions[fi], kspec, 0.0, e.what()));
        continue;
      }

      for (double alpha_value : grid.alphas) {
        const FracOrder alpha(alpha_value);
        for (const std::string& id : suite_theorems()) {
          if (!wanted(id) || id == "power") continue;
          auto guarded = [&](auto&& run) {
            try {
              out.push_back(run());
            } catch (const std::exception& e) {
              out.push_back(failed_report(id, f->source(), kspec, alpha_value, e.what()));
            }
          };
          if (id == "equivalence") {
            guarded([&] { return check_equivalence(*f, *kernel, alpha, grid.points, grid.numeric); });
          } else if (id == "linearity") {
            guarded([&] { return check_linearity(*f, *g, *kernel, alpha, 2.0, -3.0, grid.points); });
          } else if (id == "product") {
            guarded([&] { return check_product_rule(*f, *g, *kernel, alpha, grid.points); });
          } else if (id == "quotient") {
            guarded([&] {
              return check_quotient_rule(*f, *g, *kernel, alpha, grid.points, grid.orientation);
            });
          } else if (id == "chain") {
            guarded([&] { return check_chain_rule(*f, *g, *kernel, alpha, grid.points); });
          } else {
            for (const Interval& iv : grid.intervals) {
              if (id == "rolle") {
                guarded([&] {
                  const ScalarFunction aux = rolle_auxiliary(*f, *kernel, alpha, iv.a, iv.b);
                  TheoremReport r = rolle_find_c(aux, *kernel, alpha, iv.a, iv.b);
                  r.notes.push_back("auxiliary function built from f = " + f->source());
                  return r;
                });
              } else if (id == "mvt") {
                guarded([&] { return mvt_find_c(*f, *kernel, alpha, iv.a, iv.b); });
              } else if (id == "d_of_i") {
                guarded([&] {
                  return report_D_of_I(*f, *kernel, alpha, iv.a, {0.5 * (iv.a + iv.b), iv.b}, grid.quad);
                });
              } else if (id == "i_of_d") {
                guarded([&] {
                  return report_I_of_D(*f, *kernel, alpha, iv.a, {0.5 * (iv.a + iv.b), iv.b}, grid.quad);
                });
              } else if (id == "parts") {
                guarded([&] { return report_parts(*f, *g, *kernel, alpha, iv.a, iv.b, grid.quad); });
              } else if (id == "integral_mvt") {
                guarded([&] {
                  return report_integral_mean_value(*f, ScalarFunction::parse("1+x^2"), *kernel,
                                                    alpha, iv.a, iv.b, grid.quad);
                });
              } else if (id == "integral_properties") {
                guarded([&] {
                  return report_integral_properties(*f, *g, *kernel, alpha, iv.a, iv.b, -2.5,
                                                    grid.quad);
                });
              }
            }
          }
        }
      }
    }

    if (wanted("power")) {
      for (double n : kPowerExponents) {
        for (double alpha_value : grid.alphas) {
          try {
            out.push_back(check_power_rule(n, *kernel, FracOrder(alpha_value), grid.points));
          } catch (const std::exception& e) {
            out.push_back(failed_report("power", "x^" + num(n), kspec, alpha_value, e.what()));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace gcfrac
