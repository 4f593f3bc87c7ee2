#pragma once

#include <cmath>
#include <stdexcept>

namespace g2i {

/// Principal branch of the Lambert W function: the w >= -1 with w e^w = x,
/// defined for x >= -1/e. Log-based initial guess for large x, series guess
/// near the origin, branch-point expansion near -1/e, then Halley iteration
/// to ~1e-15 relative accuracy.
inline double lambert_w0(double x) {
  constexpr double kInvE = 0.36787944117144233;  // 1/e
  if (x < -kInvE) {
    if (x > -kInvE - 4e-16) x = -kInvE;  // round-off guard at the branch point
    else throw std::domain_error("lambert_w0: x < -1/e");
  }
  if (x == 0.0) return 0.0;

  double w;
  if (x > std::exp(1.0)) {
    double l1 = std::log(x), l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  } else if (x > -0.25) {
    // series of W around 0: x - x^2 + 3/2 x^3 - ...
    w = x * (1.0 - x * (1.0 - 1.5 * x));
  } else {
    // branch-point expansion around x = -1/e
    double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    w = -1.0 + p * (1.0 - p * (1.0 / 3.0 - 11.0 / 72.0 * p));
  }

  for (int it = 0; it < 60; ++it) {
    double ew = std::exp(w);
    double g = w * ew - x;
    double wp1 = w + 1.0;
    double den = ew * wp1 - (w + 2.0) * g / (2.0 * wp1);
    double step = g / den;
    w -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace g2i
