#pragma once

/**
 * @file fracint.hpp
 * @brief The kernel-weighted fractional integral and its identities.
 *
 * I^alpha f(t) = integral over [a, t] of k'(x) f(x) / k(x)^(1-alpha) dx.
 *
 * The weight k' k^(alpha-1) is the derivative of u(x) = k(x)^alpha / alpha.
 * When k(a) = 0 and alpha < 1 the weight is singular at a; the integral is
 * then computed in the variable u, where it becomes the integral of
 * f(x(u)) du with x(u) obtained by monotone inversion.
 */

#include <array>
#include <functional>
#include <string>

#include "gcfrac/errors.hpp"
#include "gcfrac/expr.hpp"
#include "gcfrac/kernel.hpp"
#include "gcfrac/order.hpp"
#include "gcfrac/quadrature.hpp"

namespace gcfrac {

using RealFn = std::function<double(double)>;

/// A quadrature inside an identity check did not converge.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult result)
      : std::runtime_error(what), result_(std::move(result)) {}
  const QuadratureResult& result() const noexcept { return result_; }

 private:
  QuadratureResult result_;
};

/// k'(x) k(x)^(alpha-1). Throws DomainError unless k(x) > 0.
double integral_weight(const Kernel& kernel, FracOrder alpha, double x);

/// I^alpha f over [a, t]. For t < a the orientation is reversed (value
/// negated); a == t gives exactly 0.
QuadratureResult i_alpha(const RealFn& f, const Kernel& kernel, FracOrder alpha, double a,
                         double t, const QuadConfig& cfg = {});
QuadratureResult i_alpha(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double a,
                         double t, const QuadConfig& cfg = {});

/// |D^alpha[I^alpha f](t) - f(t)|, differentiating the integral through the
/// fundamental theorem: k(t)^(1-alpha)/k'(t) times the integrand at t.
/// Throws QuadratureError if I^alpha f(t) itself does not converge.
double check_D_of_I(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double a,
                    double t, const QuadConfig& cfg = {});

/// Same identity, with d/dt of the integral taken numerically: symmetric
/// differences of width 2h (integrated directly over [t-h, t+h]) and
/// Richardson extrapolation in h.
double check_D_of_I_by_differences(const ScalarFunction& f, const Kernel& kernel,
                                   FracOrder alpha, double a, double t,
                                   const QuadConfig& cfg = {});

/// |I^alpha[D^alpha f](t) - (f(t) - f(a))|.
double check_I_of_D(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha, double a,
                    double t, const QuadConfig& cfg = {});

/// |I(f D^alpha g) + I(g D^alpha f) - (f(b) g(b) - f(a) g(a))| on [a, b].
double integration_by_parts_residual(const ScalarFunction& f, const ScalarFunction& g,
                                     const Kernel& kernel, FracOrder alpha, double a, double b,
                                     const QuadConfig& cfg = {});

struct MeanValueWitness {
  double xi = 0.0;        // I(f g) / I(g)
  double x0 = 0.0;        // leftmost point with f(x0) = xi
  double residual = 0.0;  // |f(x0) - xi|
  double m = 0.0;         // sampled inf f
  double M = 0.0;         // sampled sup f
  bool bracketed = true;  // false: x0 is the grid argmin of |f - xi|
};

/// Weighted integral mean value. g must not change sign on [a, b] (checked
/// on 256 samples; HypothesisError otherwise). Pass g = 1 for the plain
/// weighted mean.
MeanValueWitness integral_mean_value(const ScalarFunction& f, const ScalarFunction& g,
                                     const Kernel& kernel, FracOrder alpha, double a, double b,
                                     const QuadConfig& cfg = {});

struct IntegralProperties {
  /// Indices 0..6: additivity in f, homogeneity, orientation reversal,
  /// interval additivity, zero width, nonnegativity, triangle inequality.
  std::array<double, 7> residuals{};
  double reversed_value = 0.0;          // integral from b to a
  bool nonnegativity_applies = false;   // f >= 0 on the samples

  double max_residual() const noexcept;
};

IntegralProperties check_linearity_properties(const ScalarFunction& f, const ScalarFunction& g,
                                              const Kernel& kernel, FracOrder alpha, double a,
                                              double b, double c_mid, double lambda,
                                              const QuadConfig& cfg = {});

}  // namespace gcfrac
