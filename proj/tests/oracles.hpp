// Test-only oracles, independent of the library's evaluation paths:
//  - hard-coded piecewise polynomials for the low-degree uniform B-splines,
//  - exact integration of truncated powers against cos(kt) in long double,
//    giving closed-form Fourier coefficients of the spline kernels.
#pragma once

#include <cmath>
#include <stdexcept>

namespace oracles {

inline constexpr long double pi_l = 3.14159265358979323846264338327950288L;

// Normalized uniform B-spline of degree m at x = t/alpha (unit step),
// closed piecewise form, degrees 0..4.
inline long double bspline_piecewise(int m, long double x) {
  x = std::abs(x);
  switch (m) {
    case 0:
      if (x < 0.5L) return 1.0L;
      if (x > 0.5L) return 0.0L;
      return 0.5L;
    case 1:
      return x >= 1.0L ? 0.0L : 1.0L - x;
    case 2:
      if (x <= 0.5L) return 0.75L - x * x;
      if (x <= 1.5L) return 0.5L * (1.5L - x) * (1.5L - x);
      return 0.0L;
    case 3:
      if (x <= 1.0L) return 2.0L / 3.0L - x * x + 0.5L * x * x * x;
      if (x <= 2.0L) return (2.0L - x) * (2.0L - x) * (2.0L - x) / 6.0L;
      return 0.0L;
    case 4:
      if (x <= 0.5L)
        return 115.0L / 192.0L - (5.0L / 8.0L) * x * x + 0.25L * x * x * x * x;
      if (x <= 1.5L)
        return (55.0L + 20.0L * x - 120.0L * x * x + 80.0L * x * x * x -
                16.0L * x * x * x * x) /
               96.0L;
      if (x <= 2.5L) {
        long double y = 2.5L - x;
        return y * y * y * y / 24.0L;
      }
      return 0.0L;
    default:
      throw std::invalid_argument("bspline_piecewise: degree must be 0..4");
  }
}

// I_m(c, k) = integral over [c, pi] of (t-c)^m cos(kt) dt, exact by
// integration by parts; J_m is the sin(kt) counterpart.
inline long double power_cos_integral(int m, long double c, int k);

inline long double power_sin_integral(int m, long double c, int k) {
  long double endpoint = -std::pow(pi_l - c, (long double)m) * std::cos(k * pi_l);
  if (m == 0) {
    return (endpoint + std::cos(k * c)) / k;
  }
  return (endpoint + (long double)m * power_cos_integral(m - 1, c, k)) / k;
}

inline long double power_cos_integral(int m, long double c, int k) {
  if (k == 0) {
    return std::pow(pi_l - c, (long double)(m + 1)) / (m + 1);
  }
  long double endpoint = std::pow(pi_l - c, (long double)m) * std::sin(k * pi_l);
  if (m == 0) {
    return (endpoint - std::sin(k * c)) / k;
  }
  return (endpoint - (long double)m * power_sin_integral(m - 1, c, k)) / k;
}

inline long double binomial_l(int n, int j) {
  long double v = 1.0L;
  for (int i = 1; i <= j; ++i) v = v * (n - j + i) / i;
  return v;
}

inline long double factorial_l(int n) {
  long double v = 1.0L;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

// Exact cosine Fourier coefficient a_k of (1/alpha) * B_{m}(alpha, .) over
// [-pi, pi], via the truncated-power representation integrated termwise.
// Requires the spline support to sit inside one period.
inline long double bspline_fourier_exact(int m, long double alpha, int k) {
  const long double h = 0.5L * (m + 1) * alpha;
  long double sum = 0.0L;
  long double sign = 1.0L;
  for (int j = 0; j <= m + 1; ++j) {
    const long double c = -h + j * alpha;
    sum += sign * binomial_l(m + 1, j) * power_cos_integral(m, c, k);
    sign = -sign;
  }
  const long double spline_integral =
      sum / (factorial_l(m) * std::pow(alpha, (long double)m));
  return spline_integral / (pi_l * alpha);
}

}  // namespace oracles
