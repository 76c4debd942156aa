#include "gcfrac/fracderiv.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace gcfrac {

namespace {

std::string fmt(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string literal(double v) { return v < 0.0 ? "(" + fmt(v) + ")" : fmt(v); }

}  // namespace

void NumericConfig::validate() const {
  if (!(eps0 > 0.0)) throw ConfigError("eps0 must be positive");
  if (!(step_ratio > 0.0 && step_ratio < 1.0)) throw ConfigError("step ratio must lie in (0, 1)");
  if (richardson_depth < 0) throw ConfigError("richardson depth must be nonnegative");
  if (max_steps < richardson_depth + 2) throw ConfigError("max steps must be >= richardson depth + 2");
  if (!(tol_rel > 0.0)) throw ConfigError("tolerance must be positive");
}

double closed_form_weight(const Kernel& kernel, FracOrder alpha, double t) {
  const double k = kernel.k(t);
  if (!(k > 0.0)) throw DomainError("kernel must be positive, k(" + fmt(t) + ") = " + fmt(k));
  const double dk = kernel.k_prime(t);
  if (std::fabs(dk) < kDerivativeFloor)
    throw KernelError("kernel derivative vanishes at t = " + fmt(t));
  return std::pow(k, 1.0 - alpha.value()) / dk;
}

double displaced_point(const Kernel& kernel, FracOrder alpha, double t, double eps) {
  const double k = kernel.k(t);
  const double dk = kernel.k_prime(t);
  return t + k * std::expm1(eps * std::pow(k, -alpha.value()) / dk);
}

double d_alpha_closed(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double t) {
  const double w = closed_form_weight(kernel, alpha, t);
  const double v = w * f.slope(t);
  if (!std::isfinite(v)) throw DomainError("non-finite derivative at t = " + fmt(t));
  return v;
}

LimitEstimate d_alpha_limit(const std::function<double(double)>& f, const Kernel& kernel,
                            FracOrder alpha, double t, const NumericConfig& cfg) {
  cfg.validate();
  // Validates k(t) > 0 and k'(t) != 0.
  (void)closed_form_weight(kernel, alpha, t);
  const double k = kernel.k(t);
  const double speed = std::pow(k, -alpha.value()) / kernel.k_prime(t);
  const double f0 = f(t);
  const int depth = cfg.richardson_depth;

  LimitEstimate out;
  out.value = std::numeric_limits<double>::quiet_NaN();
  out.error_estimate = std::numeric_limits<double>::infinity();

  // prev[j] holds the previous tableau row; row length grows to depth + 1.
  std::vector<double> prev, row;
  double last_extrapolant = std::numeric_limits<double>::quiet_NaN();
  bool any_valid = false;
  double eps = cfg.eps0;
  for (int i = 0; i < cfg.max_steps; ++i, eps *= cfg.step_ratio) {
    double q;
    try {
      const double x = t + k * std::expm1(eps * speed);
      q = (f(x) - f0) / eps;
      if (!std::isfinite(q)) throw DomainError("non-finite quotient");
    } catch (const DomainError&) {
      // Restart the schedule below the step that left the domain.
      prev.clear();
      last_extrapolant = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    any_valid = true;
    out.steps_used.push_back(eps);

    row.assign(1, q);
    double factor = 1.0;
    for (std::size_t j = 1; j <= prev.size() && j <= static_cast<std::size_t>(depth); ++j) {
      factor /= cfg.step_ratio;
      row.push_back(row[j - 1] + (row[j - 1] - prev[j - 1]) / (factor - 1.0));
    }
    prev = row;
    if (row.size() < static_cast<std::size_t>(depth) + 1) continue;

    const double cand = row.back();
    if (!std::isnan(last_extrapolant)) {
      const double diff = std::fabs(cand - last_extrapolant);
      if (diff < out.error_estimate) {
        out.error_estimate = diff;
        out.value = cand;
      }
      if (diff <= cfg.tol_rel * (1.0 + std::fabs(cand))) {
        out.value = cand;
        out.error_estimate = diff;
        out.converged = true;
        return out;
      }
    }
    last_extrapolant = cand;
  }

  if (!any_valid) throw DomainError("displaced point leaves the domain of f at every step");
  if (std::isnan(out.value)) {
    out.value = prev.empty() ? std::numeric_limits<double>::quiet_NaN() : prev.back();
    out.note = "too few in-domain steps to extrapolate";
  } else {
    out.note = "extrapolants did not settle within tolerance";
  }
  return out;
}

LimitEstimate d_alpha_limit(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                            double t, const NumericConfig& cfg) {
  return d_alpha_limit([&f](double x) { return f.value(x); }, kernel, alpha, t, cfg);
}

LimitEstimate d_alpha_at_start(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                               const NumericConfig& cfg) {
  cfg.validate();
  const double a = kernel.validity_start();
  const double scale = std::max(1.0, std::fabs(a));
  const double tol = cfg.tol_rel;

  LimitEstimate out;
  out.error_estimate = std::numeric_limits<double>::infinity();
  std::vector<double> v;
  std::optional<double> last_aitken;
  int growing = 0;
  double h = cfg.eps0;
  for (int j = 0; j < cfg.max_steps; ++j, h *= cfg.step_ratio) {
    const double t = a + h * scale;
    if (!(t > a)) break;
    double val;
    try {
      val = d_alpha_closed(f, kernel, alpha, t);
    } catch (const DomainError&) {
      continue;
    } catch (const KernelError&) {
      continue;
    }
    out.steps_used.push_back(t);
    v.push_back(val);
    const std::size_t n = v.size();
    if (n < 2) continue;

    const double d1 = v[n - 1] - v[n - 2];
    if (std::fabs(d1) <= tol * (1.0 + std::fabs(v[n - 1]))) {
      out.value = v[n - 1];
      out.error_estimate = std::fabs(d1);
      out.converged = true;
      return out;
    }
    if (n < 3) continue;

    const double d0 = v[n - 2] - v[n - 3];
    growing = std::fabs(d1) >= std::fabs(d0) ? growing + 1 : 0;
    if (growing >= 3) {
      out.value = v[n - 1];
      out.note = "closed-form values grow toward the boundary; the limit does not exist";
      return out;
    }
    const double den = d1 - d0;
    const double aitken = den != 0.0 ? v[n - 1] - d1 * d1 / den : v[n - 1];
    if (last_aitken && growing == 0) {
      const double diff = std::fabs(aitken - *last_aitken);
      if (diff < out.error_estimate) {
        out.error_estimate = diff;
        out.value = aitken;
      }
      if (diff <= tol * (1.0 + std::fabs(aitken))) {
        out.value = aitken;
        out.error_estimate = diff;
        out.converged = true;
        return out;
      }
    }
    last_aitken = aitken;
  }
  if (v.empty()) throw DomainError("closed form undefined on the whole right neighbourhood");
  if (!std::isfinite(out.error_estimate)) out.value = v.back();
  if (out.note.empty()) out.note = "boundary sequence did not settle within tolerance";
  return out;
}

std::array<SpecialRow, 6> special_table(FracOrder alpha, const Kernel& kernel, double x,
                                        double a, double b) {
  std::array<SpecialRow, 6> rows{{
      {"1", "1", {}, {}},
      {"exp(a*x)", "exp(" + literal(a) + "*x)", {}, {}},
      {"sin(a*x)", "sin(" + literal(a) + "*x)", {}, {}},
      {"cos(a*x)", "cos(" + literal(a) + "*x)", {}, {}},
      {"log_a(b*x)", "ln(" + literal(b) + "*x)/ln(" + literal(a) + ")", {}, {}},
      {"a^(b*x)", literal(a) + "^(" + literal(b) + "*x)", {}, {}},
  }};

  // The table is the formula itself, so k(x) = 0 is admitted here: with
  // alpha = 1 the weight is 0^0 / k' = 1 / k'.
  auto weight = [&]() {
    const double k = kernel.k(x);
    if (k < 0.0) throw DomainError("kernel is negative at x");
    const double dk = kernel.k_prime(x);
    if (std::fabs(dk) < kDerivativeFloor) throw KernelError("kernel derivative vanishes at x");
    return std::pow(k, 1.0 - alpha.value()) / dk;
  };

  auto fill = [&](SpecialRow& row, auto&& compute) {
    try {
      const double v = compute();
      if (!std::isfinite(v)) throw DomainError("non-finite value");
      row.value = v;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  fill(rows[0], [] { return 0.0; });
  fill(rows[1], [&] { return a * weight() * std::exp(a * x); });
  fill(rows[2], [&] { return a * weight() * std::cos(a * x); });
  fill(rows[3], [&] { return -a * weight() * std::sin(a * x); });
  fill(rows[4], [&] {
    if (!(a > 0.0) || a == 1.0) throw DomainError("log base must be positive and != 1");
    if (!(b * x > 0.0)) throw DomainError("log argument b*x must be positive");
    return weight() / (x * std::log(a));
  });
  fill(rows[5], [&] {
    if (!(a > 0.0)) throw DomainError("exponential base must be positive");
    return b * weight() * std::pow(a, b * x) * std::log(a);
  });
  return rows;
}

}  // namespace gcfrac
