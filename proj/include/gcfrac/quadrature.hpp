#pragma once

#include <functional>
#include <string>

namespace gcfrac {

struct QuadConfig {
  double tol_abs = 1e-10;
  double tol_rel = 1e-9;
  int max_subdivisions = 4096;
  /// Force the substituted-variable path of i_alpha even when k(a) > 0.
  bool endpoint_singularity = false;

  void validate() const;
};

enum class QuadStatus { Converged, BudgetExhausted, Divergent };

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
  QuadStatus status = QuadStatus::BudgetExhausted;
  /// i_alpha integrated in u = k(x)^alpha / alpha.
  bool substituted = false;
  std::string note;
};

/// Globally adaptive Gauss-Kronrod (7, 15) quadrature on [a, b], a <= b.
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(tol_abs, tol_rel |value|) or the panel budget is
/// spent. Endpoints are never evaluated. When bisection stops reducing the
/// error near a point the integral is reported as Divergent.
QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    const QuadConfig& cfg = {});

}  // namespace gcfrac
