#include "gcfrac/fracint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcfrac/fracderiv.hpp"
#include "gcfrac/roots.hpp"

namespace gcfrac {

namespace {

double converged_value(const QuadratureResult& r, const char* what) {
  if (!r.converged) throw QuadratureError(std::string(what) + ": " + r.note, r);
  return r.value;
}

RealFn values_of(const ScalarFunction& f) {
  return [&f](double x) { return f.value(x); };
}

}  // namespace

double integral_weight(const Kernel& kernel, FracOrder alpha, double x) {
  const double k = kernel.k(x);
  if (!(k > 0.0)) throw DomainError("kernel must be positive inside the integration interval");
  return kernel.k_prime(x) * std::pow(k, alpha.value() - 1.0);
}

QuadratureResult i_alpha(const RealFn& f, const Kernel& kernel, FracOrder alpha, double a,
                         double t, const QuadConfig& cfg) {
  cfg.validate();
  if (a == t) {
    QuadratureResult zero;
    zero.converged = true;
    zero.status = QuadStatus::Converged;
    return zero;
  }
  if (t < a) {
    QuadratureResult r = i_alpha(f, kernel, alpha, t, a, cfg);
    r.value = -r.value;
    return r;
  }

  const bool singular = cfg.endpoint_singularity || (alpha.value() < 1.0 && kernel.k(a) == 0.0);
  if (!singular) {
    return adaptive_integrate(
        [&](double x) { return integral_weight(kernel, alpha, x) * f(x); }, a, t, cfg);
  }

  const RealFn u = [&](double x) { return kernel_order_antiderivative(kernel, alpha, x); };
  const RealFn du = [&](double x) { return integral_weight(kernel, alpha, x); };
  const double ua = u(a);
  const double ut = u(t);
  const auto integrand = [&](double s) { return f(invert_monotone(u, du, s, a, t)); };
  QuadratureResult r = ua <= ut ? adaptive_integrate(integrand, ua, ut, cfg)
                                : adaptive_integrate(integrand, ut, ua, cfg);
  if (ua > ut) r.value = -r.value;
  r.substituted = true;
  return r;
}

QuadratureResult i_alpha(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double a,
                         double t, const QuadConfig& cfg) {
  return i_alpha(values_of(f), kernel, alpha, a, t, cfg);
}

double check_D_of_I(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double a,
                    double t, const QuadConfig& cfg) {
  if (!(t > a)) throw ConfigError("the inverse property needs t > a");
  converged_value(i_alpha(f, kernel, alpha, a, t, cfg), "I^alpha f(t)");
  const double integrand = integral_weight(kernel, alpha, t) * f.value(t);
  const double result = closed_form_weight(kernel, alpha, t) * integrand;
  return std::fabs(result - f.value(t));
}

double check_D_of_I_by_differences(const ScalarFunction& f, const Kernel& kernel,
                                   FracOrder alpha, double a, double t, const QuadConfig& cfg) {
  if (!(t > a)) throw ConfigError("the inverse property needs t > a");
  converged_value(i_alpha(f, kernel, alpha, a, t, cfg), "I^alpha f(t)");

  QuadConfig tight = cfg;
  tight.tol_rel = 1e-12;
  tight.tol_abs = 1e-300;
  tight.endpoint_singularity = false;
  const double w = closed_form_weight(kernel, alpha, t);
  constexpr int levels = 4;
  double h = std::min(0.1 * (t - a), 0.05 * std::max(1.0, std::fabs(t)));
  std::vector<double> prev, row;
  for (int j = 0; j < levels; ++j, h *= 0.5) {
    // I(t+h) - I(t-h) is the integral over [t-h, t+h]; no cancellation.
    const double slab = converged_value(i_alpha(f, kernel, alpha, t - h, t + h, tight), "slab");
    row.assign(1, w * slab / (2.0 * h));
    double factor = 1.0;
    for (std::size_t m = 1; m <= prev.size(); ++m) {
      factor *= 4.0;
      row.push_back(row[m - 1] + (row[m - 1] - prev[m - 1]) / (factor - 1.0));
    }
    prev = row;
  }
  return std::fabs(prev.back() - f.value(t));
}

namespace {

/// D^alpha f as an integrand on [a, b]. Inside a thin layer at a, where the
/// closed form is not representable (k or k' underflow), the value at the
/// nearest representable point is used.
RealFn d_alpha_integrand(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double a,
                         double b) {
  const double layer = 1e-8 * std::max(1.0, std::fabs(b - a));
  return [&f, &kernel, alpha, a, layer](double x) {
    try {
      return d_alpha_closed(f, kernel, alpha, x);
    } catch (const std::runtime_error&) {
      if (!(x - a <= layer)) throw;
    } catch (const std::domain_error&) {
      if (!(x - a <= layer)) throw;
    }
    for (double h = std::max(x - a, 1e-300); h <= layer; h *= 2.0) {
      try {
        return d_alpha_closed(f, kernel, alpha, a + h);
      } catch (const std::exception&) {
      }
    }
    throw DomainError("D^alpha f is not evaluable near a = " + std::to_string(a));
  };
}

}  // namespace

double check_I_of_D(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double a,
                    double t, const QuadConfig& cfg) {
  const RealFn d = d_alpha_integrand(f, kernel, alpha, a, t);
  const double lhs = converged_value(i_alpha(d, kernel, alpha, a, t, cfg), "I^alpha[D^alpha f]");
  return std::fabs(lhs - (f.value(t) - f.value(a)));
}

double integration_by_parts_residual(const ScalarFunction& f, const ScalarFunction& g,
                                     const Kernel& kernel, FracOrder alpha, double a, double b,
                                     const QuadConfig& cfg) {
  const RealFn dg = d_alpha_integrand(g, kernel, alpha, a, b);
  const RealFn df = d_alpha_integrand(f, kernel, alpha, a, b);
  const RealFn f_dg = [&](double x) { return f.value(x) * dg(x); };
  const RealFn g_df = [&](double x) { return g.value(x) * df(x); };
  const double lhs = converged_value(i_alpha(f_dg, kernel, alpha, a, b, cfg), "I(f D g)");
  const double rhs = converged_value(i_alpha(g_df, kernel, alpha, a, b, cfg), "I(g D f)");
  const double boundary = f.value(b) * g.value(b) - f.value(a) * g.value(a);
  return std::fabs(lhs + rhs - boundary);
}

MeanValueWitness integral_mean_value(const ScalarFunction& f, const ScalarFunction& g,
                                     const Kernel& kernel, FracOrder alpha, double a, double b,
                                     const QuadConfig& cfg) {
  if (!(a < b)) throw ConfigError("the integral mean value needs a < b");

  bool positive = false, negative = false;
  constexpr int sign_samples = 256;
  for (int i = 0; i < sign_samples; ++i) {
    const double x = a + (b - a) * i / (sign_samples - 1);
    const double gx = g.value(x);
    positive = positive || gx > 0.0;
    negative = negative || gx < 0.0;
  }
  if (positive && negative) throw HypothesisError("g changes sign on [a, b]");
  if (!positive && !negative) throw HypothesisError("g vanishes on [a, b]");

  const RealFn fg = [&](double x) { return f.value(x) * g.value(x); };
  const double num = converged_value(i_alpha(fg, kernel, alpha, a, b, cfg), "I(f g)");
  const double den = converged_value(i_alpha(g, kernel, alpha, a, b, cfg), "I(g)");

  MeanValueWitness w;
  w.xi = num / den;
  constexpr int bound_samples = 1025;
  w.m = w.M = f.value(a);
  for (int i = 1; i < bound_samples; ++i) {
    const double fx = f.value(i == bound_samples - 1 ? b : a + (b - a) * i / (bound_samples - 1));
    w.m = std::min(w.m, fx);
    w.M = std::max(w.M, fx);
  }
  // m <= xi <= M pins xi when f is constant.
  if (w.m == w.M) w.xi = w.m;

  const double xi = w.xi;
  const RootScan root =
      leftmost_root([&](double x) { return f.value(x) - xi; }, a, b, 64, 0.0, 1e-12, false);
  w.x0 = root.x;
  w.bracketed = root.bracketed;
  w.residual = std::fabs(f.value(w.x0) - xi);
  return w;
}

double IntegralProperties::max_residual() const noexcept {
  return *std::max_element(residuals.begin(), residuals.end());
}

IntegralProperties check_linearity_properties(const ScalarFunction& f, const ScalarFunction& g,
                                              const Kernel& kernel, FracOrder alpha, double a,
                                              double b, double c_mid, double lambda,
                                              const QuadConfig& cfg) {
  if (!(a < c_mid && c_mid < b)) throw ConfigError("c_mid must lie inside (a, b)");
  auto I = [&](const RealFn& h, double lo, double hi, const char* what) {
    return converged_value(i_alpha(h, kernel, alpha, lo, hi, cfg), what);
  };
  const RealFn fv = values_of(f);
  const RealFn gv = values_of(g);

  IntegralProperties out;
  const double If = I(fv, a, b, "I(f)");
  const double Ig = I(gv, a, b, "I(g)");

  out.residuals[0] = std::fabs(I([&](double x) { return f.value(x) + g.value(x); }, a, b, "I(f+g)") -
                               If - Ig);
  out.residuals[1] =
      std::fabs(I([&](double x) { return lambda * f.value(x); }, a, b, "I(lambda f)") - lambda * If);
  out.reversed_value = I(fv, b, a, "I(f) reversed");
  out.residuals[2] = std::fabs(If + out.reversed_value);
  out.residuals[3] = std::fabs(If - I(fv, a, c_mid, "I(f) left") - I(fv, c_mid, b, "I(f) right"));
  out.residuals[4] = std::fabs(I(fv, a, a, "I(f) zero width"));

  out.nonnegativity_applies = true;
  for (int i = 0; i < 256 && out.nonnegativity_applies; ++i)
    out.nonnegativity_applies = f.value(a + (b - a) * i / 255.0) >= 0.0;
  out.residuals[5] = out.nonnegativity_applies ? std::max(0.0, -If) : 0.0;

  const double Iabs = I([&](double x) { return std::fabs(f.value(x)); }, a, b, "I(|f|)");
  out.residuals[6] = std::max(0.0, std::fabs(If) - Iabs);
  return out;
}

}  // namespace gcfrac
