#include "trigsum/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trigsum/compensated.hpp"
#include "trigsum/periodic.hpp"
#include "trigsum/quadrature.hpp"

namespace trigsum {

double TrigSeries::coefficient_bound() const {
  double c = 0.0;
  for (double v : a) c = std::max(c, std::abs(v));
  for (double v : b) c = std::max(c, std::abs(v));
  return c;
}

void validate(const TrigSeries& series) {
  if (!std::isfinite(series.a0)) {
    throw std::domain_error("TrigSeries: a0 must be finite");
  }
  if (series.a.size() != series.b.size()) {
    throw std::domain_error("TrigSeries: a and b must have equal length");
  }
  for (double v : series.a) {
    if (!std::isfinite(v)) throw std::domain_error("TrigSeries: a_k must be finite");
  }
  for (double v : series.b) {
    if (!std::isfinite(v)) throw std::domain_error("TrigSeries: b_k must be finite");
  }
}

void validate(const GridFunction& grid) {
  if (grid.samples.size() < 2) {
    throw std::domain_error("GridFunction: grid size must be at least 2");
  }
  for (double v : grid.samples) {
    if (!std::isfinite(v)) throw std::domain_error("GridFunction: samples must be finite");
  }
  for (const Jump& j : grid.jumps) {
    if (!(j.location >= -pi && j.location < pi)) {
      throw std::domain_error("GridFunction: jump locations must lie in [-pi, pi)");
    }
  }
}

double grid_point(std::size_t j, std::size_t grid_size) {
  return -pi + two_pi * static_cast<double>(j) / static_cast<double>(grid_size);
}

FunctionSpec FunctionSpec::square_wave() {
  FunctionSpec spec;
  spec.fn = SquareWave{};
  spec.jumps = {{-pi, 1.0, -1.0}, {0.0, -1.0, 1.0}};
  return spec;
}

FunctionSpec FunctionSpec::sawtooth() {
  FunctionSpec spec;
  spec.fn = Sawtooth{};
  spec.jumps = {{-pi, pi, -pi}};
  return spec;
}

FunctionSpec FunctionSpec::from_series(TrigSeries series, std::vector<Jump> jumps) {
  validate(series);
  FunctionSpec spec;
  spec.fn = SeriesDefined{std::move(series)};
  spec.jumps = std::move(jumps);
  return spec;
}

FunctionSpec FunctionSpec::from_samples(GridFunction grid) {
  validate(grid);
  FunctionSpec spec;
  spec.jumps = grid.jumps;
  spec.fn = SampleSet{std::move(grid)};
  return spec;
}

std::string function_label(const FunctionSpec& fn) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SquareWave>) return "square";
        else if constexpr (std::is_same_v<T, Sawtooth>) return "sawtooth";
        else if constexpr (std::is_same_v<T, SeriesDefined>) return "series";
        else return "samples";
      },
      fn.fn);
}

double eval(const FunctionSpec& fn, double t) {
  const double x = reduce_to_period(t);
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SquareWave>) {
          if (x == 0.0 || x == -pi) return 0.0;  // jump midpoints
          return x > 0.0 ? 1.0 : -1.0;
        } else if constexpr (std::is_same_v<T, Sawtooth>) {
          if (x == -pi) return 0.0;
          return x;
        } else if constexpr (std::is_same_v<T, SeriesDefined>) {
          return sum_series(f.series, x);
        } else {
          throw std::invalid_argument(
              "eval: sample-backed functions have no pointwise evaluator");
        }
      },
      fn.fn);
}

TrigSeries apply_factors(const TrigSeries& series, const FactorFamily& family) {
  validate(series);
  validate(family);
  TrigSeries out;
  out.a0 = series.a0;
  const std::size_t n = series.order();
  out.a.resize(n);
  out.b.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double mu = factor(family, static_cast<int>(k));
    out.a[k - 1] = mu * series.a[k - 1];
    out.b[k - 1] = mu * series.b[k - 1];
  }
  return out;
}

double sum_series(const TrigSeries& series, double t) {
  validate(series);
  CompensatedSum s;
  const std::size_t n = series.order();
  for (std::size_t k = 1; k <= n; ++k) {
    const double kt = static_cast<double>(k) * t;
    s.add(series.a[k - 1] * std::cos(kt) + series.b[k - 1] * std::sin(kt));
  }
  return 0.5 * series.a0 + s.value();
}

TrigSeries fourier_coefficients(const FunctionSpec& fn, int n_terms) {
  if (n_terms < 1) {
    throw std::domain_error("fourier_coefficients: N must be positive");
  }
  const std::size_t n = static_cast<std::size_t>(n_terms);
  TrigSeries out;
  out.a.assign(n, 0.0);
  out.b.assign(n, 0.0);

  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SquareWave>) {
          for (std::size_t k = 1; k <= n; ++k) {
            if (k % 2 == 1) out.b[k - 1] = 4.0 / (pi * static_cast<double>(k));
          }
        } else if constexpr (std::is_same_v<T, Sawtooth>) {
          for (std::size_t k = 1; k <= n; ++k) {
            double v = 2.0 / static_cast<double>(k);
            out.b[k - 1] = (k % 2 == 1) ? v : -v;
          }
        } else if constexpr (std::is_same_v<T, SeriesDefined>) {
          out.a0 = f.series.a0;
          for (std::size_t k = 1; k <= n && k <= f.series.order(); ++k) {
            out.a[k - 1] = f.series.a[k - 1];
            out.b[k - 1] = f.series.b[k - 1];
          }
        } else {
          const GridFunction& g = f.grid;
          const std::size_t m = g.size();
          if (2 * n >= m) {
            throw std::invalid_argument(
                "fourier_coefficients: N must be below half the grid size "
                "(aliasing)");
          }
          CompensatedSum mean;
          for (std::size_t j = 0; j < m; ++j) mean.add(g.samples[j]);
          out.a0 = 2.0 * mean.value() / static_cast<double>(m);
          for (std::size_t k = 1; k <= n; ++k) {
            CompensatedSum ca, cb;
            for (std::size_t j = 0; j < m; ++j) {
              const double kt = static_cast<double>(k) * grid_point(j, m);
              ca.add(g.samples[j] * std::cos(kt));
              cb.add(g.samples[j] * std::sin(kt));
            }
            out.a[k - 1] = 2.0 * ca.value() / static_cast<double>(m);
            out.b[k - 1] = 2.0 * cb.value() / static_cast<double>(m);
          }
        }
      },
      fn.fn);
  return out;
}

GridFunction summed_function(const FunctionSpec& fn, const FactorFamily& family,
                             int n_terms, std::size_t grid_size) {
  if (grid_size < 2) {
    throw std::domain_error("summed_function: grid size must be at least 2");
  }
  const TrigSeries factored = apply_factors(fourier_coefficients(fn, n_terms), family);
  GridFunction out;
  out.samples.resize(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) {
    out.samples[j] = sum_series(factored, grid_point(j, grid_size));
  }
  return out;
}

double convolve_with_kernel(const FunctionSpec& fn, const KernelSpec& spec,
                            double t, int quad_nodes) {
  validate(spec);
  if (quad_nodes < 16) {
    throw std::domain_error("convolve_with_kernel: need at least 16 quadrature nodes");
  }
  return std::visit(
      [&](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PoissonSpec>) {
          // Periodic trapezoid rule: (1/pi) int f(t+u) P(r,u) du.
          CompensatedSum s;
          for (int j = 0; j < quad_nodes; ++j) {
            const double u = -pi + two_pi * j / quad_nodes;
            s.add(eval(fn, t + u) * poisson_kernel(k.r, u));
          }
          return 2.0 * s.value() / quad_nodes;
        } else {
          const double tr = reduce_to_period(t);
          const double h = de_support_halfwidth(k);
          const double a = std::min(h, pi);
          std::vector<double> pts = {-a, a};
          // Spline knots inside the support.
          for (int j = 0; j <= k.r; ++j) {
            const double u = -h + j * k.alpha;
            if (u > -a && u < a) pts.push_back(u);
          }
          // Every periodic image of every jump of f that lands inside.
          for (const Jump& jp : fn.jumps) {
            for (int w = -2; w <= 2; ++w) {
              const double u = jp.location - tr + two_pi * w;
              if (u > -a && u < a) pts.push_back(u);
            }
          }
          auto integrand = [&](double u) {
            return eval(fn, tr + u) * de_kernel_closed(k, u);
          };
          // A series-defined f oscillates like its highest harmonic, so cap
          // the panel width accordingly.
          if (const auto* sd = std::get_if<SeriesDefined>(&fn.fn);
              sd != nullptr && sd->series.order() > 0) {
            const double max_width = pi / (2.0 * (double)sd->series.order());
            return integrate_panels_split(integrand, std::move(pts), quad_nodes,
                                          max_width);
          }
          return integrate_panels(integrand, std::move(pts), quad_nodes);
        }
      },
      spec);
}

}  // namespace trigsum
