#pragma once

/**
 * @file theorems.hpp
 * @brief Numerical certification of the identities satisfied by D^alpha and
 * I^alpha, one TheoremReport per (theorem, inputs) pair.
 *
 * Every check evaluates both sides of an identity independently and records
 * the absolute residual at each point. Derivative-side checks use the closed
 * form; the limit form is certified separately by the "equivalence" check.
 * Differentiability implying continuity has no executable content and is
 * not checked.
 */

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gcfrac/expr.hpp"
#include "gcfrac/fracderiv.hpp"
#include "gcfrac/kernel.hpp"
#include "gcfrac/order.hpp"
#include "gcfrac/quadrature.hpp"

namespace gcfrac {

struct TheoremReport {
  std::string theorem;     // short id, e.g. "product"
  std::string identity;    // the formula that was checked
  std::string f;
  std::string g;           // empty when unused
  std::string kernel;
  double alpha = 1.0;
  std::vector<double> points;
  std::optional<double> a, b;

  std::vector<double> residuals;   // one per evaluated point
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::optional<double> witness;   // c, or x0 for the integral mean value
  std::optional<double> xi;        // integral mean value only
  /// Quotient rule: max residual against the transposed (as printed)
  /// numerator f D g - g D f.
  std::optional<double> printed_orientation_residual;
  bool passed = false;
  std::vector<std::string> notes;

  /// Sets max_residual and passed from residuals and tolerance.
  void finalize();
};

enum class QuotientOrientation { Consistent, Printed };

inline constexpr double kRuleTolerance = 1e-8;

TheoremReport check_linearity(const ScalarFunction& f, const ScalarFunction& g,
                              const Kernel& kernel, FracOrder alpha, double wf, double wg,
                              const std::vector<double>& points, double tol = kRuleTolerance);

/// D^alpha(x^n) against k^(1-alpha)/k' n t^(n-1); residuals are relative.
TheoremReport check_power_rule(double n, const Kernel& kernel, FracOrder alpha,
                               const std::vector<double>& points, double tol = 1e-9);

TheoremReport check_product_rule(const ScalarFunction& f, const ScalarFunction& g,
                                 const Kernel& kernel, FracOrder alpha,
                                 const std::vector<double>& points, double tol = kRuleTolerance);

/// Residuals against (g D f - f D g) / g^2; the transposed numerator is
/// reported alongside. `orientation` selects which one decides the verdict.
/// Points with |g| < 1e-8 are skipped.
TheoremReport check_quotient_rule(const ScalarFunction& f, const ScalarFunction& g,
                                  const Kernel& kernel, FracOrder alpha,
                                  const std::vector<double>& points,
                                  QuotientOrientation orientation = QuotientOrientation::Consistent,
                                  double tol = kRuleTolerance);

/// D^alpha(f o g)(t) against k^(1-alpha)/k' f'(g(t)) g'(t).
TheoremReport check_chain_rule(const ScalarFunction& f, const ScalarFunction& g,
                               const Kernel& kernel, FracOrder alpha,
                               const std::vector<double>& points, double tol = kRuleTolerance);

/// Limit route against closed route, residual |limit - closed| / (1 + |closed|).
/// Points where the limit does not converge are flagged in the notes and
/// excluded from the residuals; a converged but wrong point fails.
TheoremReport check_equivalence(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                                const std::vector<double>& points,
                                const NumericConfig& cfg = {}, double tol = 1e-6);

struct WitnessConfig {
  double match_tol = 1e-10;   // |f(a) - f(b)| allowed by Rolle
  int scan_intervals = 128;
  double node_tol = 1e-10;    // grid node accepted as a root
  double tolerance = 1e-8;    // verdict threshold on the residual
};

/// Leftmost c in (a, b) with D^alpha f(c) = 0. Throws HypothesisError when
/// |f(a) - f(b)| > match_tol.
TheoremReport rolle_find_c(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                           double a, double b, const WitnessConfig& cfg = {});

/// Leftmost c in (a, b) with
/// D^alpha f(c) = (f(b) - f(a)) / (k(b)^alpha/alpha - k(a)^alpha/alpha).
/// Throws HypothesisError when the denominator vanishes.
TheoremReport mvt_find_c(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                         double a, double b, const WitnessConfig& cfg = {});

/// f - (f(b) - f(a)) / (u(b) - u(a)) * k^alpha / alpha with u = k^alpha/alpha:
/// equal values at a and b by construction.
ScalarFunction rolle_auxiliary(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                               double a, double b);

// Report wrappers around the integral identities.
TheoremReport report_D_of_I(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                            double a, const std::vector<double>& points, const QuadConfig& cfg,
                            double tol = 1e-6);
TheoremReport report_I_of_D(const ScalarFunction& f, const Kernel& kernel, FracOrder alpha,
                            double a, const std::vector<double>& points, const QuadConfig& cfg,
                            double tol = 1e-6);
TheoremReport report_parts(const ScalarFunction& f, const ScalarFunction& g, const Kernel& kernel,
                           FracOrder alpha, double a, double b, const QuadConfig& cfg,
                           double tol = 1e-6);
TheoremReport report_integral_mean_value(const ScalarFunction& f, const ScalarFunction& g,
                                         const Kernel& kernel, FracOrder alpha, double a,
                                         double b, const QuadConfig& cfg, double tol = 1e-8);
TheoremReport report_integral_properties(const ScalarFunction& f, const ScalarFunction& g,
                                         const Kernel& kernel, FracOrder alpha, double a,
                                         double b, double lambda, const QuadConfig& cfg,
                                         double tol = 1e-8);

struct Interval {
  double a;
  double b;
};

/// Theorem ids understood by run_full_suite, in execution order.
const std::vector<std::string>& suite_theorems();

struct SuiteGrid {
  std::vector<std::string> functions;   // expression text
  std::vector<std::string> kernels;     // Kernel::from_spec strings
  std::vector<double> alphas;
  std::vector<double> points;           // derivative-side evaluation points
  std::vector<Interval> intervals;      // integral and witness intervals
  std::set<std::string> theorems;       // empty: all
  QuotientOrientation orientation = QuotientOrientation::Consistent;
  NumericConfig numeric;
  QuadConfig quad;

  /// 4 preset kernels, 6 fixture functions, 10 orders, 5 points, 2 intervals.
  static SuiteGrid defaults();
};

/// Runs every selected theorem over the grid. Ordering is (kernel, function,
/// alpha, theorem, interval); binary identities pair each function with the
/// next one in the list. Failures are recorded, never thrown.
std::vector<TheoremReport> run_full_suite(const SuiteGrid& grid);

}  // namespace gcfrac
