#pragma once

#include <cmath>
#include <stdexcept>

namespace hypvol {

/// An angle in radians. Construction rejects non-finite values; operations
/// with pi-periodic semantics reduce internally, the stored value is raw.
struct Angle {
  double radians = 0.0;

  Angle() = default;
  explicit Angle(double r) : radians(r) {
    if (!std::isfinite(r)) throw std::domain_error("Angle: non-finite value");
  }
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace hypvol
