#pragma once

/**
 * @file fracderiv.hpp
 * @brief The kernel-parameterised fractional derivative D^alpha.
 *
 * Two independent evaluation routes are provided:
 *
 *  - the limit route evaluates the defining difference quotient
 *    @code
 *      Q(eps) = [ f(t - k(t) + k(t) exp(eps k(t)^-alpha / k'(t))) - f(t) ] / eps
 *    @endcode
 *    on a geometric eps schedule and Richardson-extrapolates eps -> 0;
 *  - the closed route uses D^alpha f(t) = k(t)^(1-alpha) / k'(t) * f'(t)
 *    with the symbolic derivative of f.
 *
 * The closed route requires k(t) > 0 and |k'(t)| >= kDerivativeFloor.
 */

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcfrac/expr.hpp"
#include "gcfrac/kernel.hpp"
#include "gcfrac/order.hpp"

namespace gcfrac {

struct NumericConfig {
  double eps0 = 1e-2;
  double step_ratio = 0.5;
  int max_steps = 30;
  double tol_rel = 1e-8;
  int richardson_depth = 3;

  /// Throws ConfigError when an invariant is violated.
  void validate() const;
};

struct LimitEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  std::vector<double> steps_used;
  bool converged = false;
  std::string note;
};

/// k(t)^(1-alpha) / k'(t). Throws DomainError when k(t) <= 0 and KernelError
/// when |k'(t)| is below the floor.
double closed_form_weight(const Kernel& kernel, FracOrder alpha, double t);

/// The point at which the limit quotient samples f:
/// t - k + k e^(eps k^-alpha / k'), computed as t + k expm1(...).
double displaced_point(const Kernel& kernel, FracOrder alpha, double t, double eps);

double d_alpha_closed(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double t);

LimitEstimate d_alpha_limit(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                            double t, const NumericConfig& cfg = {});

/// Limit route for an arbitrary callable. Domain errors thrown by `f` at
/// large eps are skipped.
LimitEstimate d_alpha_limit(const std::function<double(double)>& f, const Kernel& kernel,
                            FracOrder alpha, double t, const NumericConfig& cfg = {});

/// Right limit of the closed form at the kernel's validity start, taken on
/// t_j = a + eps0 * ratio^j and accelerated with Aitken's delta-squared
/// process. Reports converged = false when the values grow.
LimitEstimate d_alpha_at_start(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                               const NumericConfig& cfg = {});

struct SpecialRow {
  std::string label;        // e.g. "sin(a*x)"
  std::string expression;   // the function with a, b substituted
  std::optional<double> value;
  std::string error;        // set when value is empty
};

/// Closed-form derivatives of 1, e^(ax), sin(ax), cos(ax), log_a(bx) and
/// a^(bx) at x. Domain failures are reported per row.
std::array<SpecialRow, 6> special_table(FracOrder alpha, const Kernel& kernel, double x,
                                        double a, double b);

}  // namespace gcfrac
