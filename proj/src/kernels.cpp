#include "trigsum/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "trigsum/compensated.hpp"
#include "trigsum/factors.hpp"
#include "trigsum/periodic.hpp"

namespace trigsum {

void validate(const KernelSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PoissonSpec>) {
          if (!(s.r > 0.0 && s.r < 1.0)) {
            throw std::domain_error("Poisson kernel: r must lie in (0, 1)");
          }
        } else {
          if (s.r < 1) {
            throw std::domain_error("De kernel: r must be a positive integer");
          }
          if (!(s.alpha > 0.0 && s.alpha < pi)) {
            throw std::domain_error("De kernel: alpha must lie in (0, pi)");
          }
        }
      },
      spec);
}

double de_support_halfwidth(const DeSpec& spec) {
  return 0.5 * spec.r * spec.alpha;
}

BSpline de_bspline(const DeSpec& spec) {
  return BSpline{spec.r - 1, spec.alpha};
}

double poisson_kernel(double r, double u) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::domain_error("poisson_kernel: r must lie in (0, 1)");
  }
  if (!std::isfinite(u)) {
    throw std::domain_error("poisson_kernel: u must be finite");
  }
  return 0.5 * (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(u) + r * r);
}

double poisson_kernel_spectral(double r, double u, int n_terms) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::domain_error("poisson_kernel_spectral: r must lie in (0, 1)");
  }
  if (n_terms < 0) {
    throw std::domain_error("poisson_kernel_spectral: N must be non-negative");
  }
  CompensatedSum s;
  for (int k = 1; k <= n_terms; ++k) {
    s.add(std::pow(r, static_cast<double>(k)) * std::cos(k * u));
  }
  return 0.5 + s.value();
}

double poisson_spectral_tail_bound(double r, int n_terms) {
  return std::pow(r, static_cast<double>(n_terms + 1)) / (1.0 - r);
}

double de_kernel_spectral(const DeSpec& spec, double t, int n_terms) {
  validate(KernelSpec{spec});
  if (n_terms < 1) {
    throw std::domain_error("de_kernel_spectral: N must be positive");
  }
  const double rr = static_cast<double>(spec.r);
  CompensatedSum s;
  for (int k = 1; k <= n_terms; ++k) {
    s.add(std::pow(sinc(0.5 * k * spec.alpha), rr) * std::cos(k * t));
  }
  return (0.5 + s.value()) / pi;
}

double de_kernel_closed(const DeSpec& spec, double t) {
  validate(KernelSpec{spec});
  const BSpline b = de_bspline(spec);
  const double tr = reduce_to_period(t);
  const double h = de_support_halfwidth(spec);
  // Sum all periodic images whose support can reach [-pi, pi). For
  // r*alpha < 2*pi only the j = 0 term is nonzero.
  const int j_max = static_cast<int>(std::ceil((h + pi) / two_pi));
  double sum = 0.0;
  for (int j = -j_max; j <= j_max; ++j) {
    sum += bspline_eval(b, tr - two_pi * j);
  }
  return sum / spec.alpha;
}

double de_spectral_tail_bound(const DeSpec& spec, int n_terms) {
  validate(KernelSpec{spec});
  if (spec.r == 1) {
    // Conditionally convergent series; no absolute tail bound exists.
    return std::numeric_limits<double>::infinity();
  }
  const double rr = static_cast<double>(spec.r);
  const double c = 2.0 / spec.alpha;
  const int cap = 1000000;
  CompensatedSum s;
  for (int k = n_terms + 1; k <= cap; ++k) {
    s.add(std::min(1.0, std::pow(c / k, rr)));
  }
  // Integral remainder beyond the cap.
  double tail = std::pow(c, rr) * std::pow(static_cast<double>(cap), 1.0 - rr) /
                (rr - 1.0);
  return (s.value() + tail) / pi;
}

}  // namespace trigsum
