#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "trigsum/factors.hpp"
#include "trigsum/kernels.hpp"

namespace trigsum {

// Coefficients of a0/2 + sum_k (a[k-1] cos kt + b[k-1] sin kt).
struct TrigSeries {
  double a0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  std::size_t order() const { return a.size(); }

  // Smallest C with |a_k|, |b_k| <= C for k >= 1 (the divergent-input
  // side condition).
  double coefficient_bound() const;
};

void validate(const TrigSeries& series);

struct Jump {
  double location;  // in [-pi, pi)
  double left;      // f(location - 0)
  double right;     // f(location + 0)

  double midpoint() const { return 0.5 * (left + right); }
};

// Uniform samples on t_j = -pi + 2*pi*j/M, j = 0..M-1.
struct GridFunction {
  std::vector<double> samples;
  std::vector<Jump> jumps;

  std::size_t size() const { return samples.size(); }
};

void validate(const GridFunction& grid);

double grid_point(std::size_t j, std::size_t grid_size);

struct SquareWave {};   // -1 on (-pi, 0), +1 on (0, pi)
struct Sawtooth {};     // t on (-pi, pi)
struct SeriesDefined {
  TrigSeries series;
};
struct SampleSet {
  GridFunction grid;
};

struct FunctionSpec {
  std::variant<SquareWave, Sawtooth, SeriesDefined, SampleSet> fn;
  std::vector<Jump> jumps;

  static FunctionSpec square_wave();
  static FunctionSpec sawtooth();
  static FunctionSpec from_series(TrigSeries series,
                                  std::vector<Jump> jumps = {});
  static FunctionSpec from_samples(GridFunction grid);
};

// "square", "sawtooth", "series", "samples" (for report labels).
std::string function_label(const FunctionSpec& fn);

// Pointwise evaluation; jumps take their midpoint value. Sample-backed
// specs have no pointwise evaluator and are rejected.
double eval(const FunctionSpec& fn, double t);

// a_k' = mu_k a_k, b_k' = mu_k b_k; a0 unchanged.
TrigSeries apply_factors(const TrigSeries& series, const FactorFamily& family);

// Partial sum at t, ascending k with compensated accumulation.
double sum_series(const TrigSeries& series, double t);

// Analytic coefficients for the built-ins; trapezoid quadrature for
// samples (n_terms must stay below half the grid size to avoid aliasing);
// truncation/zero-padding for series-defined specs.
TrigSeries fourier_coefficients(const FunctionSpec& fn, int n_terms);

// fourier_coefficients -> apply_factors -> sum_series on the uniform grid.
GridFunction summed_function(const FunctionSpec& fn, const FactorFamily& family,
                             int n_terms, std::size_t grid_size);

// De kernels: Gauss-Legendre over the kernel support with panel boundaries
// at every spline knot and every jump of f inside the support, quad_nodes
// nodes per panel. Poisson: periodic trapezoid rule with quad_nodes nodes.
double convolve_with_kernel(const FunctionSpec& fn, const KernelSpec& spec,
                            double t, int quad_nodes);

}  // namespace trigsum
