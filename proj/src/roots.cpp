#include "gcfrac/roots.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gcfrac {

double bisect(const std::function<double(double)>& g, double lo, double hi, double xtol) {
  double glo = g(lo);
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (hi - lo <= xtol) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RootScan leftmost_root(const std::function<double(double)>& g, double a, double b, int intervals,
                       double node_tol, double xtol, bool interior_only) {
  if (intervals < 1) throw std::invalid_argument("root scan needs at least one interval");
  const int first = interior_only ? 1 : 0;
  const int last = interior_only ? intervals - 1 : intervals;

  auto node = [&](int i) {
    if (i == intervals) return b;
    return a + (b - a) * static_cast<double>(i) / static_cast<double>(intervals);
  };

  std::vector<std::optional<double>> values(static_cast<std::size_t>(intervals) + 1);
  for (int i = 0; i <= intervals; ++i) {
    try {
      const double v = g(node(i));
      if (std::isfinite(v)) values[static_cast<std::size_t>(i)] = v;
    } catch (const std::exception&) {
    }
  }

  std::optional<RootScan> best;
  for (int i = first; i <= last; ++i) {
    const auto& vi = values[static_cast<std::size_t>(i)];
    if (!vi) continue;
    if (std::fabs(*vi) <= node_tol) return {node(i), *vi, true};
    if (!best || std::fabs(*vi) < std::fabs(best->value)) best = RootScan{node(i), *vi, false};
    if (i + 1 > intervals) continue;
    const auto& vn = values[static_cast<std::size_t>(i) + 1];
    if (vn && ((*vi < 0.0) != (*vn < 0.0)) && *vn != 0.0) {
      const double x = bisect(g, node(i), node(i + 1), xtol);
      return {x, g(x), true};
    }
  }
  if (!best) throw std::domain_error("function undefined at every scan node");
  return *best;
}

double invert_monotone(const std::function<double(double)>& u,
                       const std::function<double(double)>& du, double target, double lo,
                       double hi) {
  double flo = u(lo) - target;
  double fhi = u(hi) - target;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw std::domain_error("target outside the monotone range");
  const bool increasing = flo < 0.0;

  double x = 0.5 * (lo + hi);
  double last_step = hi - lo;
  for (int it = 0; it < 400; ++it) {
    const double fx = u(x) - target;
    if (fx == 0.0) return x;
    if ((fx < 0.0) == increasing) lo = x;
    else hi = x;
    if (!(hi - lo > 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(x))) return x;

    double next = 0.5 * (lo + hi);
    double d = 0.0;
    try {
      d = du(x);
    } catch (const std::exception&) {
    }
    if (d != 0.0 && std::isfinite(d)) {
      const double newton = x - fx / d;
      if (newton >= lo && newton <= hi &&
          std::fabs(newton - x) <= 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(x))
        return newton;
      // Newton only while it stays inside the bracket and at least halves
      // the previous step.
      if (newton > lo && newton < hi && std::fabs(newton - x) < 0.5 * last_step) next = newton;
    }
    if (next == x) return x;
    last_step = std::fabs(next - x);
    x = next;
  }
  return x;
}

}  // namespace gcfrac
