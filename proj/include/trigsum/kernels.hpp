#pragma once

#include <variant>

#include "trigsum/splines.hpp"

namespace trigsum {

struct PoissonSpec {
  double r;  // 0 < r < 1
};

struct DeSpec {
  int r;         // kernel order, r >= 1
  double alpha;  // 0 < alpha < pi
};

using KernelSpec = std::variant<PoissonSpec, DeSpec>;

void validate(const KernelSpec& spec);

// Half-width of the compact support r*alpha/2 (may exceed pi, in which
// case the periodized kernel covers the whole period).
double de_support_halfwidth(const DeSpec& spec);

// The B-spline whose periodization, scaled by 1/alpha, equals the kernel.
BSpline de_bspline(const DeSpec& spec);

// Closed form (1/2)(1-r^2)/(1-2r cos u + r^2). Positive, even, 2pi-periodic.
double poisson_kernel(double r, double u);

// 1/2 + sum_{k=1..N} r^k cos(ku). Converges geometrically to the closed form.
double poisson_kernel_spectral(double r, double u, int n_terms);

// Geometric tail bound r^(N+1)/(1-r) on |spectral - closed|.
double poisson_spectral_tail_bound(double r, int n_terms);

// Truncated series (1/pi)(1/2 + sum_{k=1..N} sinc(k alpha/2)^r cos(kt)).
double de_kernel_spectral(const DeSpec& spec, double t, int n_terms);

// Production path: (1/alpha) * periodized B-spline of degree r-1.
double de_kernel_closed(const DeSpec& spec, double t);

// (1/pi) sum_{k>N} min(1, (2/(k alpha))^r); infinite for r = 1 where the
// series converges only conditionally.
double de_spectral_tail_bound(const DeSpec& spec, int n_terms);

}  // namespace trigsum
