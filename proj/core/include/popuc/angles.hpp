#pragma once

#include <cmath>

#include "popuc/specfun.hpp"

namespace popuc {

/// Canonical branch: reduces theta into [theta0, theta0 + 2*pi).
inline double reduce_angle(double theta, double theta0 = 0.0) {
  double r = std::fmod(theta - theta0, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return theta0 + r;
}

/// Signed representative of theta in (-pi, pi].
inline double wrap_pi(double theta) {
  double r = reduce_angle(theta, -kPi);
  return r == -kPi ? kPi : r;
}

}  // namespace popuc

namespace popuc {

/// Argument of z on the branch [theta0, theta0 + 2pi). Values within
/// 1e-13 of the upper end are folded onto theta0, so a zero sitting on
/// the cut reports theta0 rather than theta0 + 2pi - eps.
inline double canonical_arg(Complex z, double theta0 = 0.0) {
  const double a = reduce_angle(std::arg(z), theta0);
  return (theta0 + kTwoPi) - a < 1e-13 ? theta0 : a;
}

}  // namespace popuc
