#include "trigsum/factors.hpp"

#include <cmath>
#include <stdexcept>

#include "trigsum/periodic.hpp"

namespace trigsum {

double sinc(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("sinc: argument must be finite");
  }
  // Maclaurin branch: truncation error below 1e-18 for |x| < 1e-4, and no
  // cancellation near the removable singularity.
  if (std::abs(x) < 1e-4) {
    double x2 = x * x;
    return 1.0 + x2 * (-1.0 / 6.0 + x2 / 120.0);
  }
  return std::sin(x) / x;
}

void validate(const FactorFamily& family) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PoissonAbel>) {
          if (!(f.r > 0.0 && f.r < 1.0)) {
            throw std::domain_error("PoissonAbel: r must lie in (0, 1)");
          }
        } else if constexpr (std::is_same_v<T, SigmaRAlpha>) {
          if (f.r < 1) {
            throw std::domain_error("SigmaRAlpha: r must be a positive integer");
          }
          if (!(f.alpha > 0.0 && f.alpha <= pi)) {
            throw std::domain_error("SigmaRAlpha: alpha must lie in (0, pi]");
          }
          if (!(f.r * f.alpha < two_pi)) {
            throw std::domain_error(
                "SigmaRAlpha: r*alpha must be below 2*pi (kernel support must "
                "fit one period)");
          }
        } else if constexpr (std::is_same_v<T, Lanczos>) {
          if (f.n < 1) {
            throw std::domain_error("Lanczos: n must be a positive integer");
          }
        }
      },
      family);
}

double factor(const FactorFamily& family, int k) {
  validate(family);
  if (k < 0) {
    throw std::domain_error("factor: k must be non-negative");
  }
  if (k == 0) return 1.0;  // constant term is never attenuated
  return std::visit(
      [k](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Identity>) {
          return 1.0;
        } else if constexpr (std::is_same_v<T, PoissonAbel>) {
          return std::pow(f.r, static_cast<double>(k));
        } else if constexpr (std::is_same_v<T, SigmaRAlpha>) {
          return std::pow(sinc(0.5 * k * f.alpha), static_cast<double>(f.r));
        } else {
          const Lanczos& l = f;
          if (k > l.n) return 0.0;
          return sinc(k * pi / (l.n + 1));
        }
      },
      family);
}

std::vector<double> factor_table(const FactorFamily& family, int n_max) {
  if (n_max < 1) {
    throw std::domain_error("factor_table: N must be a positive integer");
  }
  std::vector<double> table(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) {
    table[static_cast<std::size_t>(k)] = factor(family, k);
  }
  return table;
}

}  // namespace trigsum
