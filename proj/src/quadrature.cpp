#include "gcfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "gcfrac/errors.hpp"

namespace gcfrac {

namespace {

// Kronrod abscissae (nonnegative half) and weights; every second abscissa
// is also a 7-point Gauss node.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool roundoff_limited;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // ties: leftmost first
  }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

  const double ah = std::fabs(half);
  resk *= half;
  resabs *= ah;
  resasc *= ah;
  double err = std::fabs((resk - resg * half));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  bool roundoff = false;
  if (resabs > uflow / (50.0 * eps) && 50.0 * eps * resabs >= err) {
    err = 50.0 * eps * resabs;
    roundoff = true;
  }
  if (!std::isfinite(resk) || !std::isfinite(err))
    throw DomainError("integrand is not finite on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  return {a, b, resk, err, roundoff};
}

}  // namespace

void QuadConfig::validate() const {
  if (!(tol_abs > 0.0) || !(tol_rel > 0.0)) throw ConfigError("quadrature tolerances must be positive");
  if (max_subdivisions < 8) throw ConfigError("quadrature budget must be at least 8 panels");
}

QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    const QuadConfig& cfg) {
  cfg.validate();
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    out.status = QuadStatus::Converged;
    return out;
  }
  if (a > b) throw ConfigError("adaptive_integrate expects a <= b");

  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  const Panel first = gk15(f, a, b);
  heap.push(first);
  double total = first.value;
  double total_err = first.error;
  int panels = 1;
  int stalled = 0;

  auto tolerance = [&] { return std::max(cfg.tol_abs, cfg.tol_rel * std::fabs(total)); };

  out.status = QuadStatus::Converged;
  while (total_err > tolerance()) {
    if (panels >= cfg.max_subdivisions) {
      out.status = QuadStatus::BudgetExhausted;
      out.note = "panel budget exhausted";
      break;
    }
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      out.status = QuadStatus::Divergent;
      out.note = "panel width reached machine resolution near x = " + std::to_string(mid);
      break;
    }
    heap.pop();
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++panels;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;

    // A non-integrable singularity keeps the error of the panels around it
    // constant (or growing) however finely they are cut.
    const bool noise = left.roundoff_limited || right.roundoff_limited;
    stalled = (!noise && left.error + right.error >= 0.999 * worst.error) ? stalled + 1 : 0;
    if (stalled >= 60) {
      out.status = QuadStatus::Divergent;
      out.note = "error does not shrink under subdivision near x = " + std::to_string(mid) +
                 "; integrand is likely not integrable";
      break;
    }
  }

  // Deterministic left-to-right accumulation of the final panel set.
  std::vector<Panel> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double value = 0.0, err = 0.0;
  for (const Panel& p : all) {
    value += p.value;
    err += p.error;
  }
  out.value = value;
  out.error_estimate = err;
  out.subdivisions = panels;
  out.converged = out.status == QuadStatus::Converged;
  return out;
}

}  // namespace gcfrac
