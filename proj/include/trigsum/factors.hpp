#pragma once

#include <variant>
#include <vector>

namespace trigsum {

// sin(x)/x with the removable singularity filled by 1.
double sinc(double x);

// Convergence-factor families. Each maps a harmonic index k to a
// multiplier mu_k; k = 0 always maps to 1 (the constant term is never
// attenuated).
struct Identity {};

struct PoissonAbel {
  double r;  // geometric decay base, 0 < r < 1
};

struct SigmaRAlpha {
  int r;         // sinc power, r >= 1
  double alpha;  // step, 0 < alpha < pi
};

struct Lanczos {
  int n;  // cutoff order; equals SigmaRAlpha(1, 2*pi/(n+1)) for k <= n, 0 beyond
};

using FactorFamily = std::variant<Identity, PoissonAbel, SigmaRAlpha, Lanczos>;

// Throws std::domain_error naming the violated constraint.
void validate(const FactorFamily& family);

double factor(const FactorFamily& family, int k);

// Entries 0..n_max of the factor sequence.
std::vector<double> factor_table(const FactorFamily& family, int n_max);

}  // namespace trigsum
