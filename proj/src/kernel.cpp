#include "gcfrac/kernel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

namespace gcfrac {

namespace {

std::string format_number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

Kernel::Kernel(ScalarFunction fn, double start, std::optional<KernelPreset> preset, double p,
               std::string name)
    : fn_(std::move(fn)), start_(start), preset_(preset), p_(p), name_(std::move(name)) {}

Kernel Kernel::preset(KernelPreset id, double p, double exponential_floor) {
  const ExprTree t = ExprTree::variable("t");
  switch (id) {
    case KernelPreset::Identity:
      return Kernel(ScalarFunction(t), 0.0, id, 1.0, "identity");
    case KernelPreset::Power:
      if (!(p > 0.0) || !std::isfinite(p))
        throw ConfigError("power kernel exponent must be positive, got " + format_number(p));
      return Kernel(ScalarFunction(pow(t, ExprTree::constant(p))), 0.0, id, p,
                    "power:" + format_number(p));
    case KernelPreset::Exponential:
      return Kernel(ScalarFunction(apply(UnaryOp::Exp, t)), exponential_floor, id, 1.0, "exp");
    case KernelPreset::LogShift:
      return Kernel(ScalarFunction(apply(UnaryOp::Ln, ExprTree::constant(1.0) + t)), 0.0, id, 1.0,
                    "log1p");
  }
  throw ConfigError("unknown kernel preset");
}

Kernel Kernel::from_expression(std::string_view text, double validity_start) {
  ExprTree tree = ExprTree::parse(text);
  return Kernel(ScalarFunction(std::move(tree)), validity_start, std::nullopt, 1.0,
                std::string(text));
}

Kernel Kernel::from_spec(std::string_view spec, double expression_start) {
  if (spec == "identity") return preset(KernelPreset::Identity);
  if (spec == "exp") return preset(KernelPreset::Exponential);
  if (spec == "log1p") return preset(KernelPreset::LogShift);
  if (spec.starts_with("power:")) {
    const std::string_view num = spec.substr(6);
    double p = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
      throw ConfigError("bad power kernel exponent in '" + std::string(spec) + "'");
    return preset(KernelPreset::Power, p);
  }
  return from_expression(spec, expression_start);
}

KernelValidationReport validate_kernel(const Kernel& kernel, double a, double b,
                                       std::size_t samples) {
  if (!(a < b)) throw ConfigError("kernel validation needs a < b");
  if (samples < 16) throw ConfigError("kernel validation needs at least 16 samples");

  KernelValidationReport report{a, b, samples, {}};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  // Chebyshev nodes of the first kind, ascending; all strictly interior.
  double prev_t = 0.0, prev_dk = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double theta =
        std::numbers::pi * (2.0 * static_cast<double>(samples - 1 - j) + 1.0) /
        (2.0 * static_cast<double>(samples));
    const double t = mid + half * std::cos(theta);
    try {
      const double k = kernel.k(t);
      const double dk = kernel.k_prime(t);
      if (!(k > 0.0)) {
        report.violations.push_back({t, "k(t) = " + format_number(k) + " is not positive"});
      } else if (std::fabs(dk) < kDerivativeFloor) {
        report.violations.push_back({t, "|k'(t)| = " + format_number(std::fabs(dk)) +
                                            " is below the floor"});
      } else if (prev_dk != 0.0 && (dk > 0.0) != (prev_dk > 0.0)) {
        report.violations.push_back(
            {t, "k' changes sign between " + format_number(prev_t) + " and " + format_number(t)});
      }
      prev_t = t;
      prev_dk = dk;
    } catch (const DomainError& e) {
      report.violations.push_back({t, std::string("domain error: ") + e.what()});
    }
  }
  return report;
}

double kernel_order_antiderivative(const Kernel& kernel, FracOrder alpha, double t) {
  const double k = kernel.k(t);
  if (k < 0.0) throw DomainError("kernel is negative at t = " + format_number(t));
  return std::pow(k, alpha.value()) / alpha.value();
}

}  // namespace gcfrac
