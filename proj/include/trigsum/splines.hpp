#pragma once

namespace trigsum {

// Uniform normalized B-spline of degree `degree` on a knot grid with
// spacing `step`, centered at the origin. Partition of unity holds:
// sum_j B(t - j*step) = 1.
struct BSpline {
  int degree;   // m >= 0
  double step;  // 0 < step < pi
};

void validate(const BSpline& spline);

// Support is [-w, w] with w = (degree+1)*step/2.
double support_halfwidth(const BSpline& spline);

// Non-periodic evaluation. Degree 0 takes the value 1/2 at the two
// discontinuity knots (jump midpoint).
double bspline_eval(const BSpline& spline, double t);

// Periodized over 2*pi. Requires (degree+1)*step < 2*pi so exactly one
// bump fits per period; wider supports are rejected, not aliased.
double bspline_eval_periodic(const BSpline& spline, double t);

// Convolving with the box (1/step)*B_0 raises the degree by one (verified
// numerically in the tests). Requires the result to still fit one period.
BSpline raise_order(const BSpline& spline);

// Cosine Fourier coefficient a_k of (1/step)*B over [-pi, pi]:
// a_0 = 1/pi, a_k = sinc(k*step/2)^(degree+1) / pi.
double bspline_fourier_coefficient(const BSpline& spline, int k);

}  // namespace trigsum
