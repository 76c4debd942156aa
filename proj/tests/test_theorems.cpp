#include <doctest.h>

#include <cmath>

#include "gcfrac/errors.hpp"
#include "gcfrac/theorems.hpp"

using namespace gcfrac;

namespace {
const Kernel kId = Kernel::from_spec("identity");
const Kernel kPow2 = Kernel::from_spec("power:2");
ScalarFunction fn(const char* s) { return ScalarFunction::parse(s); }
const std::vector<double> kPts{0.5, 1.0, 2.0};
}  // namespace

TEST_CASE("linearity") {
  auto r = check_linearity(fn("sin(x)"), fn("x^2"), kId, FracOrder(0.5), 2.0, -3.0, kPts);
  CHECK(r.passed);
  CHECK(r.max_residual <= 1e-10);
  CHECK(check_linearity(fn("sin(x)"), fn("x^2"), kId, FracOrder(0.5), 1.0, 0.0, kPts).max_residual == 0.0);
  CHECK(check_linearity(fn("sin(x)"), fn("x^2"), kId, FracOrder(0.5), 0.0, 0.0, kPts).max_residual == 0.0);
}

TEST_CASE("power rule") {
  for (double n : {-1.0, 0.5, 1.0, 2.0, 3.0})
    for (const char* k : {"identity", "power:2", "exp", "log1p"})
      CHECK(check_power_rule(n, Kernel::from_spec(k), FracOrder(0.6), kPts).passed);
}

TEST_CASE("product rule") {
  CHECK(check_product_rule(fn("sin(x)"), fn("1"), kId, FracOrder(0.5), kPts).max_residual <= 1e-12);
  const auto r = check_product_rule(fn("x"), fn("x"), kId, FracOrder(1.0), {3.0});
  CHECK(r.max_residual == 0.0);
  CHECK(check_product_rule(fn("sin(x)"), fn("exp(x)"), kPow2, FracOrder(0.3), {1.5}).max_residual <= 1e-9);
}

TEST_CASE("quotient rule orientations") {
  auto r = check_quotient_rule(fn("x"), fn("x^2"), kId, FracOrder(1.0), {2.0});
  CHECK(r.passed);
  r = check_quotient_rule(fn("sin(x)"), fn("1+x^2"), kId, FracOrder(0.5), {1.0});
  CHECK(r.max_residual <= 1e-9);
  REQUIRE(r.printed_orientation_residual.has_value());
  // printed numerator is the negation, so its residual is 2 |D(f/g)|
  const double d = d_alpha_closed(fn("sin(x)/(1+x^2)"), kId, FracOrder(0.5), 1.0);
  CHECK(*r.printed_orientation_residual == doctest::Approx(2 * std::fabs(d)).epsilon(1e-9));

  const auto printed = check_quotient_rule(fn("sin(x)"), fn("1+x^2"), kId, FracOrder(0.5), {1.0},
                                           QuotientOrientation::Printed);
  CHECK_FALSE(printed.passed);
  CHECK(check_quotient_rule(fn("sin(x)"), fn("1"), kPow2, FracOrder(0.5), kPts).max_residual <= 1e-12);
}

TEST_CASE("quotient rule skips near-zero denominators") {
  const auto r = check_quotient_rule(fn("x"), fn("x - 1"), kId, FracOrder(0.5), {0.5, 1.0, 2.0});
  CHECK(r.residuals.size() == 2);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("chain rule") {
  CHECK(check_chain_rule(fn("sin(x)"), fn("x"), kId, FracOrder(0.5), kPts).max_residual <= 1e-12);
  CHECK(check_chain_rule(fn("x^2"), fn("sin(x)"), kId, FracOrder(1.0), {1.0}).passed);
  CHECK(check_chain_rule(fn("exp(x)"), fn("x^2"), kPow2, FracOrder(0.5), {1.2}).max_residual <= 1e-9);
}

TEST_CASE("equivalence") {
  const auto r = check_equivalence(fn("x*sin(x)"), kPow2, FracOrder(0.4), {0.5, 1.0, 2.0});
  CHECK(r.passed);
  CHECK(r.residuals.size() == 3);
}

TEST_CASE("rolle witnesses") {
  auto r = rolle_find_c(fn("(x-1)*(x-3)"), kId, FracOrder(1.0), 1.0, 3.0);
  CHECK(std::fabs(*r.witness - 2.0) <= 1e-8);
  r = rolle_find_c(fn("(x-1)*(x-3)"), kId, FracOrder(0.5), 1.0, 3.0);
  CHECK(std::fabs(*r.witness - 2.0) <= 1e-8);
  CHECK(r.max_residual <= 1e-8);
  r = rolle_find_c(fn("sin(pi*x)"), kId, FracOrder(0.5), 0.0, 2.0);
  CHECK(std::fabs(*r.witness - 0.5) <= 1e-8);
  CHECK_THROWS_AS(rolle_find_c(fn("x"), kId, FracOrder(0.5), 1.0, 3.0), HypothesisError);
}

TEST_CASE("rolle witness is scale invariant") {
  const auto base = rolle_find_c(fn("sin(pi*x)"), kPow2, FracOrder(0.7), 0.25, 2.75);
  for (const char* scaled : {"2*sin(pi*x)", "-sin(pi*x)"}) {
    const auto r = rolle_find_c(fn(scaled), kPow2, FracOrder(0.7), 0.25, 2.75);
    CHECK(*r.witness == doctest::Approx(*base.witness).epsilon(1e-12));
  }
}

TEST_CASE("mean value witnesses") {
  auto r = mvt_find_c(fn("x^2"), kId, FracOrder(1.0), 0.0, 2.0);
  CHECK(std::fabs(*r.witness - 1.0) <= 1e-8);
  r = mvt_find_c(fn("x"), kId, FracOrder(0.5), 1.0, 4.0);
  CHECK(std::fabs(*r.witness - 2.25) <= 1e-8);
  CHECK(r.max_residual <= 1e-8);
  r = mvt_find_c(fn("3"), kId, FracOrder(0.5), 1.0, 4.0);
  CHECK(r.max_residual == 0.0);
  CHECK(*r.witness > 1.0);
  CHECK(*r.witness < 4.0);
}

TEST_CASE("rolle auxiliary function") {
  const auto g = rolle_auxiliary(fn("exp(x)"), kPow2, FracOrder(0.5), 0.5, 2.0);
  CHECK(g.value(0.5) == doctest::Approx(g.value(2.0)).epsilon(1e-12));
}

TEST_CASE("suite") {
  SuiteGrid empty;
  CHECK(run_full_suite(empty).empty());

  SuiteGrid grid = SuiteGrid::defaults();
  grid.kernels = {"exp"};
  grid.alphas = {0.5};
  const auto reports = run_full_suite(grid);
  CHECK_FALSE(reports.empty());
  for (const auto& r : reports) {
    CAPTURE(r.theorem);
    CAPTURE(r.f);
    CHECK(r.passed);
  }
  const auto again = run_full_suite(grid);
  REQUIRE(again.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) CHECK(again[i].max_residual == reports[i].max_residual);
}

TEST_CASE("suite records failures") {
  SuiteGrid grid = SuiteGrid::defaults();
  grid.kernels = {"identity", "not a kernel ("};
  grid.alphas = {1.0};
  grid.theorems = {"quotient"};
  grid.orientation = QuotientOrientation::Printed;
  const auto reports = run_full_suite(grid);
  bool failed = false;
  for (const auto& r : reports) failed = failed || !r.passed;
  CHECK(failed);
}
