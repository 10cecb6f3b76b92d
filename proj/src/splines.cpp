#include "trigsum/splines.hpp"

#include <cmath>
#include <stdexcept>

#include "trigsum/factors.hpp"
#include "trigsum/periodic.hpp"

namespace trigsum {

namespace {

double binomial(int n, int j) {
  double c = 1.0;
  for (int i = 1; i <= j; ++i) {
    c = c * (n - j + i) / i;
  }
  return c;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

void validate(const BSpline& spline) {
  if (spline.degree < 0) {
    throw std::domain_error("BSpline: degree must be non-negative");
  }
  if (!(spline.step > 0.0 && spline.step < pi)) {
    throw std::domain_error("BSpline: step must lie in (0, pi)");
  }
}

double support_halfwidth(const BSpline& spline) {
  return 0.5 * (spline.degree + 1) * spline.step;
}

double bspline_eval(const BSpline& spline, double t) {
  validate(spline);
  if (!std::isfinite(t)) {
    throw std::domain_error("bspline_eval: t must be finite");
  }
  const int m = spline.degree;
  const double a = spline.step;
  const double x = std::abs(t);

  if (m == 0) {
    if (x < 0.5 * a) return 1.0;
    if (x > 0.5 * a) return 0.0;
    return 0.5;  // jump midpoint at the knot
  }
  if (m == 1) {
    // Dedicated branch keeps the hat exact to a couple of ulps.
    if (x >= a) return 0.0;
    return (a - x) / a;
  }

  const double h = support_halfwidth(spline);
  if (x >= h) return 0.0;

  // Truncated-power form: (1/(m! a^m)) sum_j (-1)^j C(m+1,j) (t + h - j a)_+^m
  const double shifted = x + h;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 0; j <= m + 1; ++j) {
    double u = shifted - j * a;
    if (u <= 0.0) break;
    sum += sign * binomial(m + 1, j) * std::pow(u, m);
    sign = -sign;
  }
  double value = sum / (factorial(m) * std::pow(a, m));
  return value > 0.0 ? value : 0.0;
}

double bspline_eval_periodic(const BSpline& spline, double t) {
  validate(spline);
  if (!((spline.degree + 1) * spline.step < two_pi)) {
    throw std::domain_error(
        "bspline_eval_periodic: support (degree+1)*step must be below 2*pi");
  }
  return bspline_eval(spline, reduce_to_period(t));
}

BSpline raise_order(const BSpline& spline) {
  validate(spline);
  if (!((spline.degree + 2) * spline.step < two_pi)) {
    throw std::domain_error(
        "raise_order: resulting support (degree+2)*step must be below 2*pi");
  }
  return BSpline{spline.degree + 1, spline.step};
}

double bspline_fourier_coefficient(const BSpline& spline, int k) {
  validate(spline);
  if (!((spline.degree + 1) * spline.step < two_pi)) {
    throw std::domain_error(
        "bspline_fourier_coefficient: support must fit one period");
  }
  if (k < 0) {
    throw std::domain_error("bspline_fourier_coefficient: k must be non-negative");
  }
  if (k == 0) return 1.0 / pi;
  return std::pow(sinc(0.5 * k * spline.step),
                  static_cast<double>(spline.degree + 1)) /
         pi;
}

}  // namespace trigsum
