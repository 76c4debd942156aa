#pragma once

#include <functional>

namespace gcfrac {

struct RootScan {
  double x = 0.0;
  double value = 0.0;      // g(x)
  bool bracketed = false;  // false: x is the grid argmin of |g|
};

/// Bisection on a bracket with g(lo) g(hi) < 0, down to width xtol (or
/// machine resolution when xtol is 0).
double bisect(const std::function<double(double)>& g, double lo, double hi, double xtol = 0.0);

/// Leftmost root of g on [a, b]. Scans `intervals` equal subintervals; a grid
/// node with |g| <= node_tol counts as a root, otherwise the first sign
/// change is bisected to `xtol`. Nodes where g throws are skipped. With
/// `interior_only` the endpoints a and b are not candidates.
/// Without any root, returns the grid argmin of |g| with bracketed = false.
/// Throws std::domain_error if g is undefined at every node.
RootScan leftmost_root(const std::function<double(double)>& g, double a, double b, int intervals,
                       double node_tol, double xtol, bool interior_only);

/// Solves u(x) = target for x in [lo, hi], where u is monotone with
/// derivative du. Safeguarded Newton: falls back to bisection whenever the
/// Newton step leaves the bracket.
double invert_monotone(const std::function<double(double)>& u,
                       const std::function<double(double)>& du, double target, double lo,
                       double hi);

}  // namespace gcfrac
