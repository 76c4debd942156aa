#include <doctest.h>

#include <cmath>

#include "gcfrac/errors.hpp"
#include "gcfrac/fracint.hpp"

using namespace gcfrac;

namespace {
const Kernel kId = Kernel::from_spec("identity");
const Kernel kPow2 = Kernel::from_spec("power:2");
ScalarFunction fn(const char* s) { return ScalarFunction::parse(s); }
}  // namespace

TEST_CASE("integral examples") {
  auto r = i_alpha(fn("1"), kId, FracOrder(0.5), 0.0, 4.0);
  CHECK(r.converged);
  CHECK(r.substituted);
  CHECK(std::fabs(r.value - 4.0) <= 1e-9);

  r = i_alpha(fn("x"), kId, FracOrder(1.0), 0.0, 2.0);
  CHECK(std::fabs(r.value - 2.0) <= 1e-12);
  CHECK_FALSE(r.substituted);

  r = i_alpha(fn("1"), kPow2, FracOrder(0.5), 0.0, 3.0);
  CHECK(std::fabs(r.value - 6.0) <= 1e-9);
}

TEST_CASE("orientation and zero width") {
  const auto fwd = i_alpha(fn("x"), kId, FracOrder(1.0), 0.0, 1.0);
  const auto rev = i_alpha(fn("x"), kId, FracOrder(1.0), 1.0, 0.0);
  CHECK(rev.value == doctest::Approx(-0.5));
  CHECK(rev.value == -fwd.value);
  CHECK(i_alpha(fn("exp(x)"), kId, FracOrder(0.3), 1.0, 1.0).value == 0.0);
}

TEST_CASE("non-integrable input") {
  const auto r = i_alpha(fn("1/x"), kId, FracOrder(1.0), 0.0, 1.0);
  CHECK_FALSE(r.converged);
}

TEST_CASE("substitution agrees with a truncated direct quadrature") {
  // direct quadrature on [delta, b] plus the analytic tail delta^alpha/alpha
  for (double alpha : {0.25, 0.5, 0.75}) {
    const double delta = 1e-6, b = 2.0;
    const RealFn one = [](double) { return 1.0; };
    const auto sub = i_alpha(one, kId, FracOrder(alpha), 0.0, b);
    const auto direct = i_alpha(one, kId, FracOrder(alpha), delta, b);
    CHECK(std::fabs(sub.value - (direct.value + std::pow(delta, alpha) / alpha)) <= 1e-6);
  }
}

TEST_CASE("inverse properties") {
  CHECK(check_D_of_I(fn("sin(x)"), kId, FracOrder(0.5), 1.0, 2.0) <= 1e-7);
  for (const char* k : {"identity", "power:2", "exp", "log1p"})
    CHECK(check_D_of_I(fn("1"), Kernel::from_spec(k), FracOrder(0.7), 0.5, 1.5) <= 1e-9);
  CHECK(check_D_of_I(fn("exp(x)"), kPow2, FracOrder(0.3), 0.5, 1.0) <= 1e-7);
  CHECK(check_D_of_I_by_differences(fn("sin(x)"), kId, FracOrder(0.5), 1.0, 2.0) <= 1e-6);

  CHECK(check_I_of_D(fn("x"), kId, FracOrder(0.5), 1.0, 4.0) <= 1e-8);
  CHECK(check_I_of_D(fn("x^2"), kId, FracOrder(1.0), 0.0, 2.0) <= 1e-10);
  CHECK(check_I_of_D(fn("sin(x)"), kPow2, FracOrder(0.5), 0.5, 2.0) <= 1e-7);
  CHECK(check_I_of_D(fn("sin(x)"), kPow2, FracOrder(0.1), 0.0, 1.5) <= 1e-7);
}

TEST_CASE("integration by parts") {
  CHECK(integration_by_parts_residual(fn("1"), fn("x^3 - x"), kId, FracOrder(0.4), 0.5, 2.0) <= 1e-8);
  CHECK(integration_by_parts_residual(fn("x"), fn("x"), kId, FracOrder(1.0), 0.0, 1.0) <= 1e-10);
  CHECK(integration_by_parts_residual(fn("sin(x)"), fn("exp(x)"), kId, FracOrder(0.5), 0.5, 1.5) <= 1e-6);
}

TEST_CASE("integral mean value") {
  auto w = integral_mean_value(fn("x"), fn("1"), kId, FracOrder(1.0), 0.0, 2.0);
  CHECK(w.xi == doctest::Approx(1.0));
  CHECK(w.x0 == doctest::Approx(1.0));

  w = integral_mean_value(fn("x^2"), fn("1"), kId, FracOrder(1.0), 0.0, 3.0);
  CHECK(std::fabs(w.xi - 3.0) <= 1e-9);
  CHECK(std::fabs(w.x0 - std::sqrt(3.0)) <= 1e-8);
  CHECK(w.m <= w.xi);
  CHECK(w.xi <= w.M);

  w = integral_mean_value(fn("4"), fn("1+x"), kPow2, FracOrder(0.5), 0.5, 2.0);
  CHECK(w.xi == 4.0);
  CHECK(w.residual == 0.0);
  CHECK(w.x0 >= 0.5);
  CHECK(w.x0 <= 2.0);

  CHECK_THROWS_AS(integral_mean_value(fn("x"), fn("x - 1"), kId, FracOrder(1.0), 0.0, 2.0), HypothesisError);
  CHECK_THROWS_AS(integral_mean_value(fn("x"), fn("0"), kId, FracOrder(1.0), 0.0, 2.0), HypothesisError);
}

TEST_CASE("linearity properties") {
  const auto p = check_linearity_properties(fn("exp(x)"), fn("x^2"), kId, FracOrder(0.5), 0.5, 2.0, 1.0, -2.5);
  CHECK(p.max_residual() <= 1e-9);
  CHECK(p.residuals[4] == 0.0);
  CHECK(p.nonnegativity_applies);

  const auto q = check_linearity_properties(fn("x"), fn("1"), kId, FracOrder(1.0), 0.0, 1.0, 0.5, 3.0);
  CHECK(q.reversed_value == doctest::Approx(-0.5));
}
