#pragma once

#include <map>
#include <string>
#include <vector>

#include "trigsum/engine.hpp"
#include "trigsum/kernels.hpp"

namespace trigsum {

struct VerificationReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  double observed = 0.0;
  double bound = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
};

// Integral of the kernel over delta < |t| <= pi. Returns exactly 0 (no
// quadrature) for De kernels whose support lies inside |t| <= delta.
double kernel_mass_outside(const KernelSpec& spec, double delta, int quad_nodes);

// Integral over |t| <= delta; delta = pi gives the total mass.
double kernel_mass_inside(const KernelSpec& spec, double delta, int quad_nodes);

// Convolves fn with De(r, alpha) at a recorded jump t0 for each alpha and
// reports |value - jump midpoint| against a 1e-10 bound.
std::vector<VerificationReport> jump_convergence_study(
    const FunctionSpec& fn, int r, const std::vector<double>& alphas, double t0);

// Quadrature Fourier cosine coefficients of the closed-form kernel vs the
// factors sinc(k alpha/2)^r, max deviation over k = 0..k_max, bound 1e-10.
VerificationReport coefficient_roundtrip(int r, double alpha, int k_max);

// Grid maximum of the summed function minus the true supremum of fn
// (built-ins only).
double gibbs_overshoot(const FunctionSpec& fn, const FactorFamily& family,
                       int n_terms, std::size_t grid_size);

// Named suites: "splines", "kernels", "engine", "analysis", "all".
std::vector<VerificationReport> run_suite(const std::string& suite);

// Deterministic JSON array (runtime_ms is reported separately, not
// serialized, so consecutive runs are byte-identical).
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace trigsum
