#pragma once

#include <cmath>
#include <numbers>

namespace trigsum {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Reduces t into [-pi, pi). Exact for arguments already in range.
inline double reduce_to_period(double t) {
  double x = std::remainder(t, two_pi);
  if (x == pi) x = -pi;
  return x;
}

}  // namespace trigsum
