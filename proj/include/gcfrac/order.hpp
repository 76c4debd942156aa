#pragma once

#include <string>

#include "gcfrac/errors.hpp"

namespace gcfrac {

/// Fractional order alpha, restricted to (0, 1].
class FracOrder {
 public:
  explicit FracOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
      throw ConfigError("order alpha must lie in (0, 1], got " + std::to_string(alpha));
  }

  double value() const noexcept { return alpha_; }
  bool is_classical() const noexcept { return alpha_ == 1.0; }

  friend bool operator==(FracOrder, FracOrder) = default;

 private:
  double alpha_;
};

}  // namespace gcfrac
