#include <doctest.h>

#include <cmath>

#include "gcfrac/errors.hpp"
#include "gcfrac/fracderiv.hpp"

using namespace gcfrac;

namespace {
const Kernel kId = Kernel::from_spec("identity");
const Kernel kPow2 = Kernel::from_spec("power:2");
}  // namespace

TEST_CASE("closed form") {
  CHECK(d_alpha_closed(ScalarFunction::parse("x^2"), kId, FracOrder(1.0), 3.0) == doctest::Approx(6.0));
  CHECK(d_alpha_closed(ScalarFunction::parse("x"), kId, FracOrder(0.5), 4.0) == doctest::Approx(2.0));
  for (const char* k : {"identity", "power:2", "exp", "log1p"})
    CHECK(d_alpha_closed(ScalarFunction::parse("5"), Kernel::from_spec(k), FracOrder(0.3), 1.2) == 0.0);
}

TEST_CASE("closed form rejects degenerate kernels") {
  CHECK_THROWS_AS(d_alpha_closed(ScalarFunction::parse("x"), kId, FracOrder(0.5), 0.0), DomainError);
  CHECK_THROWS_AS(d_alpha_closed(ScalarFunction::parse("x"), kId, FracOrder(0.5), -1.0), DomainError);
  const Kernel flat = Kernel::from_spec("(x-1)^2 + 1");
  CHECK_THROWS_AS(d_alpha_closed(ScalarFunction::parse("x"), flat, FracOrder(0.5), 1.0), KernelError);
}

TEST_CASE("identity kernel displacement") {
  // t - k + k exp(eps k^-alpha / k') reduces to t exp(eps t^-alpha)
  for (double t : {0.5, 1.0, 3.0})
    for (double eps : {1e-2, 1e-4})
      CHECK(displaced_point(kId, FracOrder(0.4), t, eps) ==
            doctest::Approx(t * std::exp(eps * std::pow(t, -0.4))).epsilon(1e-14));
}

TEST_CASE("limit route") {
  auto lim = d_alpha_limit(ScalarFunction::parse("x^2"), kId, FracOrder(1.0), 3.0);
  CHECK(lim.converged);
  CHECK(std::fabs(lim.value - 6.0) <= 1e-8);

  lim = d_alpha_limit(ScalarFunction::parse("sin(x)"), kId, FracOrder(0.5), 1.0);
  CHECK(lim.converged);
  CHECK(std::fabs(lim.value - std::cos(1.0)) <= 1e-6);

  lim = d_alpha_limit(ScalarFunction::parse("exp(2*x)"), kPow2, FracOrder(0.5), 2.0);
  CHECK(lim.converged);
  CHECK(std::fabs(lim.value - std::exp(4.0)) <= 1e-5);
  CHECK(lim.error_estimate <= 1e-8 * (1 + std::fabs(lim.value)));
  CHECK(lim.steps_used.front() == 1e-2);
}

TEST_CASE("limit skips steps that leave the domain") {
  // f defined only below 1.005; the first displaced points overshoot it
  const auto f = ScalarFunction::parse("sqrt(1.005 - x)");
  const auto lim = d_alpha_limit(f, kId, FracOrder(1.0), 1.0);
  CHECK(lim.converged);
  CHECK(lim.value == doctest::Approx(-0.5 / std::sqrt(0.005)).epsilon(1e-6));
  CHECK(lim.steps_used.front() < 1e-2);
}

TEST_CASE("limit reports non-convergence") {
  NumericConfig cfg;
  cfg.max_steps = 5;
  cfg.tol_rel = 1e-16;
  const auto lim = d_alpha_limit(ScalarFunction::parse("sin(50*x)"), kId, FracOrder(0.5), 1.0, cfg);
  CHECK_FALSE(lim.converged);
  CHECK(std::isfinite(lim.value));
}

TEST_CASE("limit with no in-domain step") {
  const auto f = [](double x) -> double {
    if (x != 1.0) throw DomainError("isolated point");
    return 0.0;
  };
  CHECK_THROWS_AS(d_alpha_limit(f, kId, FracOrder(1.0), 1.0), DomainError);
}

TEST_CASE("numeric config validation") {
  NumericConfig cfg;
  cfg.step_ratio = 1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.max_steps = 4;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("boundary limit") {
  auto r = d_alpha_at_start(ScalarFunction::parse("x"), kId, FracOrder(1.0));
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0));

  r = d_alpha_at_start(ScalarFunction::parse("x"), kId, FracOrder(0.5));
  CHECK(r.converged);
  CHECK(std::fabs(r.value) <= 1e-6);

  r = d_alpha_at_start(ScalarFunction::parse("sqrt(x)"), kId, FracOrder(0.5));
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.5));

  r = d_alpha_at_start(ScalarFunction::parse("ln(x)"), kId, FracOrder(0.5));
  CHECK_FALSE(r.converged);
}

TEST_CASE("special function table") {
  auto rows = special_table(FracOrder(1.0), kId, 0.0, 1.0, 1.0);
  CHECK(*rows[0].value == 0.0);
  CHECK(*rows[2].value == doctest::Approx(1.0));

  rows = special_table(FracOrder(0.5), kId, 1.0, 2.0, 1.0);
  CHECK(*rows[1].value == doctest::Approx(14.778112).epsilon(1e-7));

  rows = special_table(FracOrder(0.5), kId, 1.0, 2.0, -1.0);
  CHECK_FALSE(rows[4].value.has_value());
  CHECK_FALSE(rows[4].error.empty());
  CHECK(rows[1].value.has_value());
  CHECK(rows[5].value.has_value());
}

TEST_CASE("special table rows agree with the limit route") {
  for (const char* k : {"identity", "power:2", "exp", "log1p"}) {
    const Kernel kernel = Kernel::from_spec(k);
    for (double alpha : {0.3, 0.7, 1.0}) {
      const auto rows = special_table(FracOrder(alpha), kernel, 1.3, 2.0, 1.5);
      for (const auto& row : rows) {
        CAPTURE(k);
        CAPTURE(row.label);
        REQUIRE(row.value.has_value());
        const auto lim = d_alpha_limit(ScalarFunction::parse(row.expression), kernel, FracOrder(alpha), 1.3);
        CHECK(std::fabs(lim.value - *row.value) <= 1e-5 * std::max(1.0, std::fabs(*row.value)));
      }
    }
  }
}
