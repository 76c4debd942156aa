#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcfrac/expr.hpp"
#include "gcfrac/order.hpp"

namespace gcfrac {

/// |k'(t)| below this value counts as k'(t) = 0.
inline constexpr double kDerivativeFloor = 1e-12;

enum class KernelPreset { Identity, Power, Exponential, LogShift };

/// Default lower end of the validity interval of the exponential kernel,
/// whose mathematical interval is unbounded below.
inline constexpr double kExponentialFloor = -20.0;

/**
 * The kernel map k together with its exact derivative and the left end a of
 * the interval on which it is meant to be used.
 *
 * k must satisfy k(t) > 0 and k'(t) != 0 for t > a. Nothing here assumes it:
 * call validate_kernel() on the interval of interest. k(a) = 0 is allowed and
 * is the case in which the integral has an integrable endpoint singularity.
 */
class Kernel {
 public:
  /// identity: t, power: t^p (p > 0), exponential: e^t, log-shift: ln(1+t).
  static Kernel preset(KernelPreset id, double p = 1.0,
                       double exponential_floor = kExponentialFloor);

  /// Arbitrary kernel given as expression text in one variable.
  static Kernel from_expression(std::string_view text, double validity_start);

  /// CLI-facing form: "identity", "power:p", "exp", "log1p", or else an
  /// expression, whose validity interval starts at `expression_start`.
  static Kernel from_spec(std::string_view spec, double expression_start = 0.0);

  double k(double t) const { return fn_.value(t); }
  double k_prime(double t) const { return fn_.slope(t); }

  double validity_start() const noexcept { return start_; }
  std::optional<KernelPreset> preset_id() const noexcept { return preset_; }
  /// Exponent of the power preset (1 for identity).
  double power() const noexcept { return p_; }

  /// Spec string that reproduces this kernel through from_spec.
  const std::string& name() const noexcept { return name_; }
  const ScalarFunction& function() const noexcept { return fn_; }

 private:
  Kernel(ScalarFunction fn, double start, std::optional<KernelPreset> preset, double p,
         std::string name);

  ScalarFunction fn_;
  double start_;
  std::optional<KernelPreset> preset_;
  double p_;
  std::string name_;
};

struct KernelViolation {
  double t;
  std::string reason;
};

struct KernelValidationReport {
  double a = 0.0;
  double b = 0.0;
  std::size_t samples = 0;
  std::vector<KernelViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Samples k and k' at `samples` Chebyshev nodes strictly inside (a, b).
/// Domain errors are reported as violations. Requires a < b, samples >= 16.
KernelValidationReport validate_kernel(const Kernel& kernel, double a, double b,
                                       std::size_t samples = 64);

/// u(t) = k(t)^alpha / alpha, whose derivative k' k^(alpha-1) is the weight
/// of the fractional integral.
double kernel_order_antiderivative(const Kernel& kernel, FracOrder alpha, double t);

}  // namespace gcfrac
