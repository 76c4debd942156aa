// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gcfrac/cli.hpp"
#include "gcfrac/fracint.hpp"
#include "gcfrac/theorems.hpp"

using namespace gcfrac;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const std::vector<const char*> kFunctions{"x^2", "sin(x)", "exp(2*x)", "ln(1+x)", "1/(1+x^2)", "x*sin(x)"};
const std::vector<const char*> kKernels{"identity", "power:2", "exp", "log1p"};
const std::vector<double> kPoints{0.5, 1.0, 1.5, 2.0, 3.0};

double worst_of(const std::vector<TheoremReport>& reports, const std::string& id, bool& all_passed,
                std::size_t& count) {
  double worst = 0;
  all_passed = true;
  count = 0;
  for (const auto& r : reports) {
    if (r.theorem != id) continue;
    ++count;
    all_passed = all_passed && r.passed;
    worst = std::max(worst, std::isfinite(r.max_residual) ? r.max_residual : INFINITY);
  }
  return worst;
}

void equivalence() {
  const auto start = std::chrono::steady_clock::now();
  int cases = 0, agree = 0, flagged = 0, silent = 0;
  for (const char* k : kKernels) {
    const Kernel kernel = Kernel::from_spec(k);
    for (const char* f : kFunctions) {
      const auto fn = ScalarFunction::parse(f);
      for (int i = 1; i <= 10; ++i) {
        const FracOrder alpha(i / 10.0);
        for (double t : kPoints) {
          ++cases;
          const double closed = d_alpha_closed(fn, kernel, alpha, t);
          const LimitEstimate lim = d_alpha_limit(fn, kernel, alpha, t);
          const bool close = std::fabs(lim.value - closed) <= 1e-6 * (1 + std::fabs(closed));
          if (lim.converged && close) ++agree;
          else if (!lim.converged) ++flagged;
          else ++silent;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = cases == 1200 && agree * 100 >= cases * 99 && silent == 0 && secs <= 30.0;
  verdict(1, ok,
          "equivalence: " + std::to_string(agree) + "/" + std::to_string(cases) + " agree, " +
              std::to_string(flagged) + " flagged non-converged, " + std::to_string(silent) +
              " silently wrong, " + fmt("%.2f s", secs));
}

void classical() {
  const Kernel id = Kernel::from_spec("identity");
  const FracOrder one(1.0);
  const std::vector<std::function<double(double)>> derivs{
      [](double x) { return 2 * x; },
      [](double x) { return std::cos(x); },
      [](double x) { return 2 * std::exp(2 * x); },
      [](double x) { return 1 / (1 + x); },
      [](double x) { return -2 * x / ((1 + x * x) * (1 + x * x)); },
      [](double x) { return std::sin(x) + x * std::cos(x); }};
  const std::vector<std::function<double(double)>> antider{
      [](double x) { return x * x * x / 3; },
      [](double x) { return -std::cos(x); },
      [](double x) { return std::exp(2 * x) / 2; },
      [](double x) { return (1 + x) * std::log1p(x) - x; },
      [](double x) { return std::atan(x); },
      [](double x) { return std::sin(x) - x * std::cos(x); }};
  double worst_d = 0, worst_i = 0;
  for (std::size_t i = 0; i < kFunctions.size(); ++i) {
    const auto fn = ScalarFunction::parse(kFunctions[i]);
    for (double t : kPoints)
      worst_d = std::max(worst_d, std::fabs(d_alpha_closed(fn, id, one, t) - derivs[i](t)));
    for (auto [a, b] : {std::pair{0.0, 1.5}, std::pair{0.5, 2.0}, std::pair{1.0, 3.0}}) {
      const auto r = i_alpha(fn, id, one, a, b);
      worst_i = std::max(worst_i, std::fabs(r.value - (antider[i](b) - antider[i](a))));
    }
  }
  verdict(2, worst_d <= 1e-10 && worst_i <= 1e-10,
          fmt("classical reduction: max derivative error %.3e, max integral error %.3e", worst_d, worst_i));
}

void inverse(const std::vector<TheoremReport>& suite) {
  bool p1, p2;
  std::size_t n1, n2;
  const double d = worst_of(suite, "d_of_i", p1, n1);
  const double i = worst_of(suite, "i_of_d", p2, n2);
  verdict(3, p1 && p2 && n1 > 0 && n2 > 0 && d <= 1e-6 && i <= 1e-6,
          fmt("inverse properties: D(I f) max residual %.3e, I(D f) max residual %.3e", d, i) + " over " +
              std::to_string(n1 + n2) + " reports");
}

void rules(const std::vector<TheoremReport>& suite) {
  double worst = 0;
  bool ok = true;
  for (const char* id : {"product", "chain", "linearity", "power", "quotient"}) {
    bool p;
    std::size_t n;
    worst = std::max(worst, worst_of(suite, id, p, n));
    ok = ok && p && n > 0;
  }
  const auto printed = check_quotient_rule(ScalarFunction::parse("sin(x)"), ScalarFunction::parse("1+x^2"),
                                           Kernel::from_spec("identity"), FracOrder(0.5), {1.0},
                                           QuotientOrientation::Printed);
  double printed_worst = 0;
  for (const auto& r : suite)
    if (r.theorem == "quotient" && r.printed_orientation_residual)
      printed_worst = std::max(printed_worst, *r.printed_orientation_residual);
  ok = ok && worst <= 1e-8 && !printed.passed && printed_worst > 1e-8;
  verdict(4, ok,
          fmt("rule residuals: max %.3e; printed quotient orientation residual %.3e on sin/(1+x^2), max %.3e on grid",
              worst, printed.max_residual, printed_worst));
}

void witnesses() {
  const Kernel id = Kernel::from_spec("identity");
  struct Case {
    bool rolle;
    const char* f;
    double alpha, a, b, expected;
  };
  const Case cases[] = {
      {true, "(x-1)*(x-3)", 1.0, 1, 3, 2.0},  {true, "(x-1)*(x-3)", 0.5, 1, 3, 2.0},
      {true, "sin(pi*x)", 0.5, 0, 2, 0.5},    {false, "x^2", 1.0, 0, 2, 1.0},
      {false, "x", 0.5, 1, 4, 2.25},
  };
  double worst_c = 0, worst_r = 0;
  for (const Case& c : cases) {
    const auto f = ScalarFunction::parse(c.f);
    const auto r = c.rolle ? rolle_find_c(f, id, FracOrder(c.alpha), c.a, c.b)
                           : mvt_find_c(f, id, FracOrder(c.alpha), c.a, c.b);
    worst_c = std::max(worst_c, r.witness ? std::fabs(*r.witness - c.expected) : INFINITY);
    worst_r = std::max(worst_r, r.max_residual);
  }
  // constant f: zero target, any interior c
  const auto k = mvt_find_c(ScalarFunction::parse("3"), id, FracOrder(0.5), 1, 4);
  const bool constant_ok = k.max_residual == 0.0 && *k.witness > 1 && *k.witness < 4;
  verdict(5, worst_c <= 1e-8 && worst_r <= 1e-8 && constant_ok,
          fmt("Rolle/MVT witnesses: max |c - c_hand| %.3e, max residual %.3e", worst_c, worst_r));
}

void mean_value(const std::vector<TheoremReport>& suite) {
  const auto w = integral_mean_value(ScalarFunction::parse("x^2"), ScalarFunction::parse("1"),
                                     Kernel::from_spec("identity"), FracOrder(1.0), 0.0, 3.0);
  const double dxi = std::fabs(w.xi - 3.0), dx0 = std::fabs(w.x0 - std::sqrt(3.0));
  bool p;
  std::size_t n;
  const double worst = worst_of(suite, "integral_mvt", p, n);
  verdict(6, dxi <= 1e-9 && dx0 <= 1e-8 && p && n > 0 && worst <= 1e-8,
          fmt("integral mean value: |xi - 3| %.3e, |x0 - sqrt 3| %.3e, grid max residual %.3e", dxi, dx0, worst) +
              " over " + std::to_string(n) + " reports");
}

void singular() {
  double worst = 0;
  bool substituted = true;
  const RealFn one = [](double) { return 1.0; };
  for (const char* k : {"identity", "power:2", "log1p", "power:0.5"}) {
    const Kernel kernel = Kernel::from_spec(k);
    for (double alpha : {0.25, 0.5, 0.75}) {
      for (double b : {0.5, 1.0, 3.0}) {
        const auto r = i_alpha(one, kernel, FracOrder(alpha), 0.0, b);
        substituted = substituted && r.substituted && r.converged;
        worst = std::max(worst, std::fabs(r.value - std::pow(kernel.k(b), alpha) / alpha));
      }
    }
  }
  verdict(7, substituted && worst <= 1e-8,
          fmt("singular endpoint: max |I - k(b)^alpha/alpha| %.3e via substitution", worst));
}

void properties_and_verify(const std::vector<TheoremReport>& suite) {
  bool p;
  std::size_t n;
  const double worst = worst_of(suite, "integral_properties", p, n);

  const char* argv[] = {"gcfrac", "verify", "--format", "json"};
  std::ostringstream out1, out2, err;
  const int code1 = cli::main_entry(4, argv, out1, err);
  const int code2 = cli::main_entry(4, argv, out2, err);
  const bool stable = out1.str() == out2.str() && !out1.str().empty();
  verdict(8, p && n > 0 && worst <= 1e-8 && code1 == 0 && code2 == 0 && stable,
          fmt("properties i-vii: max residual %.3e", worst) + " over " + std::to_string(n) +
              " reports; verify exit " + std::to_string(code1) + ", JSON " +
              (stable ? "byte-stable (" + std::to_string(out1.str().size()) + " bytes)" : "NOT stable"));
}

}  // namespace

int main() {
  const std::vector<TheoremReport> suite = run_full_suite(SuiteGrid::defaults());
  equivalence();
  classical();
  inverse(suite);
  rules(suite);
  witnesses();
  mean_value(suite);
  singular();
  properties_and_verify(suite);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
