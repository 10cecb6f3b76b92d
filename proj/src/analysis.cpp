#include "trigsum/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "trigsum/compensated.hpp"
#include "trigsum/periodic.hpp"
#include "trigsum/quadrature.hpp"

namespace trigsum {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(int v) { return std::to_string(v); }

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationReport make_report(std::string name,
                               std::map<std::string, std::string> params,
                               double observed, double bound,
                               Clock::time_point start) {
  VerificationReport r;
  r.name = std::move(name);
  r.parameters = std::move(params);
  r.observed = observed;
  r.bound = bound;
  r.passed = observed <= bound;
  r.runtime_ms = elapsed_ms(start);
  return r;
}

// Breakpoints for integrating the closed De kernel over [lo, hi] on the
// positive half-axis: interval ends plus every spline knot inside.
std::vector<double> de_panel_points(const DeSpec& spec, double lo, double hi) {
  std::vector<double> pts = {lo, hi};
  const double h = de_support_halfwidth(spec);
  for (int j = 0; j <= spec.r; ++j) {
    const double u = -h + j * spec.alpha;
    if (u > lo && u < hi) pts.push_back(u);
  }
  return pts;
}

}  // namespace

double kernel_mass_outside(const KernelSpec& spec, double delta, int quad_nodes) {
  validate(spec);
  if (!(delta > 0.0 && delta < pi)) {
    throw std::domain_error("kernel_mass_outside: delta must lie in (0, pi)");
  }
  return std::visit(
      [&](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PoissonSpec>) {
          auto f = [&](double u) { return poisson_kernel(k.r, u) / pi; };
          return 2.0 * integrate_panels_split(f, {delta, pi}, quad_nodes,
                                              (pi - delta) / 8.0);
        } else {
          if (k.alpha < 2.0 * delta / k.r) {
            return 0.0;  // support [-r*alpha/2, r*alpha/2] lies inside |t| <= delta
          }
          const double hi = std::min(de_support_halfwidth(k), pi);
          if (hi <= delta) return 0.0;
          auto f = [&](double u) { return de_kernel_closed(k, u); };
          return 2.0 * integrate_panels(f, de_panel_points(k, delta, hi),
                                        quad_nodes);
        }
      },
      spec);
}

double kernel_mass_inside(const KernelSpec& spec, double delta, int quad_nodes) {
  validate(spec);
  if (!(delta > 0.0 && delta <= pi)) {
    throw std::domain_error("kernel_mass_inside: delta must lie in (0, pi]");
  }
  return std::visit(
      [&](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PoissonSpec>) {
          // Dyadic panels toward the peak at 0; the kernel concentrates
          // there as r -> 1.
          std::vector<double> pts = {0.0, delta};
          double w = delta;
          for (int i = 0; i < 48; ++i) {
            w *= 0.5;
            pts.push_back(w);
          }
          auto f = [&](double u) { return poisson_kernel(k.r, u) / pi; };
          return 2.0 * integrate_panels(f, std::move(pts), quad_nodes);
        } else {
          const double hi = std::min({delta, de_support_halfwidth(k), pi});
          auto f = [&](double u) { return de_kernel_closed(k, u); };
          return 2.0 * integrate_panels(f, de_panel_points(k, 0.0, hi),
                                        quad_nodes);
        }
      },
      spec);
}

std::vector<VerificationReport> jump_convergence_study(
    const FunctionSpec& fn, int r, const std::vector<double>& alphas, double t0) {
  if (r < 1) {
    throw std::domain_error("jump_convergence_study: r must be a positive integer");
  }
  if (alphas.empty()) {
    throw std::domain_error("jump_convergence_study: alpha list must be non-empty");
  }
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    if (!(alphas[i] < alphas[i - 1])) {
      throw std::domain_error(
          "jump_convergence_study: alpha list must be strictly decreasing");
    }
  }
  const Jump* jump = nullptr;
  for (const Jump& j : fn.jumps) {
    if (std::abs(reduce_to_period(t0 - j.location)) < 1e-9) {
      jump = &j;
      break;
    }
  }
  if (jump == nullptr) {
    throw std::domain_error("jump_convergence_study: t0 is not a recorded jump");
  }
  const double midpoint = jump->midpoint();

  std::vector<VerificationReport> reports;
  for (double alpha : alphas) {
    auto start = Clock::now();
    const double value = convolve_with_kernel(fn, DeSpec{r, alpha}, t0, 32);
    reports.push_back(make_report(
        "jump_convergence",
        {{"fn", function_label(fn)},
         {"r", fmt(r)},
         {"alpha", fmt(alpha)},
         {"t0", fmt(t0)}},
        std::abs(value - midpoint), 1e-10, start));
  }
  return reports;
}

VerificationReport coefficient_roundtrip(int r, double alpha, int k_max) {
  auto start = Clock::now();
  if (k_max < 1) {
    throw std::domain_error("coefficient_roundtrip: K must be positive");
  }
  const DeSpec spec{r, alpha};
  validate(KernelSpec{spec});
  if (!(r * alpha < two_pi)) {
    throw std::domain_error("coefficient_roundtrip: r*alpha must be below 2*pi");
  }
  const double h = de_support_halfwidth(spec);
  double max_dev = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    auto f = [&](double t) { return de_kernel_closed(spec, t) * std::cos(k * t); };
    // Sub-split so each panel covers at most a quarter oscillation.
    const double max_width = k > 0 ? pi / (2.0 * k) : h;
    const double integral =
        integrate_panels_split(f, de_panel_points(spec, 0.0, h), 16, max_width);
    // a_k = (2/pi) * integral by evenness; compare pi*a_k to the factor.
    const double scaled = 2.0 * integral;
    const double expected =
        k == 0 ? 1.0 : std::pow(sinc(0.5 * k * alpha), static_cast<double>(r));
    max_dev = std::max(max_dev, std::abs(scaled - expected));
  }
  return make_report("coefficient_roundtrip",
                     {{"r", fmt(r)}, {"alpha", fmt(alpha)}, {"K", fmt(k_max)}},
                     max_dev, 1e-10, start);
}

double gibbs_overshoot(const FunctionSpec& fn, const FactorFamily& family,
                       int n_terms, std::size_t grid_size) {
  if (fn.jumps.empty()) {
    throw std::domain_error("gibbs_overshoot: function has no recorded jump");
  }
  if (grid_size < 4096) {
    throw std::domain_error("gibbs_overshoot: grid size must be at least 4096");
  }
  const double supremum = std::visit(
      [](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SquareWave>) return 1.0;
        else if constexpr (std::is_same_v<T, Sawtooth>) return pi;
        else
          throw std::invalid_argument(
              "gibbs_overshoot: supremum known only for built-in functions");
      },
      fn.fn);
  const GridFunction g = summed_function(fn, family, n_terms, grid_size);
  double max_value = -std::numeric_limits<double>::infinity();
  for (double v : g.samples) max_value = std::max(max_value, v);
  return max_value - supremum;
}

namespace {

void suite_splines(std::vector<VerificationReport>& out) {
  // Partition of unity at random points, fixed seed.
  for (int m = 0; m <= 4; ++m) {
    auto start = Clock::now();
    const BSpline b{m, pi / 4.0};
    std::mt19937 rng(20240915u + static_cast<unsigned>(m));
    std::uniform_real_distribution<double> dist(-pi, pi);
    double max_dev = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double t = dist(rng);
      CompensatedSum s;
      const int j_span = static_cast<int>(std::ceil(
          (support_halfwidth(b) + std::abs(t)) / b.step)) + 1;
      for (int j = -j_span; j <= j_span; ++j) {
        s.add(bspline_eval(b, t - j * b.step));
      }
      max_dev = std::max(max_dev, std::abs(s.value() - 1.0));
    }
    out.push_back(make_report("bspline_partition_of_unity",
                              {{"m", fmt(m)}, {"alpha", fmt(pi / 4.0)}},
                              max_dev, 1e-12, start));
  }

  // Box convolution raises the degree by one.
  for (int m = 0; m <= 3; ++m) {
    auto start = Clock::now();
    const double alpha = pi / 4.0;
    const BSpline low{m, alpha};
    const BSpline high = raise_order(low);
    double max_dev = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double t = -pi + two_pi * i / 100.0;
      std::vector<double> pts = {-0.5 * alpha, 0.5 * alpha};
      for (int j = 0; j <= m + 1; ++j) {
        const double u = t - (-support_halfwidth(low) + j * alpha);
        if (u > -0.5 * alpha && u < 0.5 * alpha) pts.push_back(u);
      }
      auto f = [&](double u) { return bspline_eval(low, t - u) / alpha; };
      const double conv = integrate_panels(f, std::move(pts), 16);
      max_dev = std::max(max_dev, std::abs(conv - bspline_eval(high, t)));
    }
    out.push_back(make_report("bspline_order_raising",
                              {{"m", fmt(m)}, {"alpha", fmt(pi / 4.0)}},
                              max_dev, 1e-8, start));
  }
}

void suite_kernels(std::vector<VerificationReport>& out) {
  for (int r : {2, 3}) {
    auto start = Clock::now();
    const DeSpec spec{r, pi / 4.0};
    const int n = 1024;
    double max_dev = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double t = -pi + two_pi * i / 100.0;
      max_dev = std::max(max_dev, std::abs(de_kernel_spectral(spec, t, n) -
                                           de_kernel_closed(spec, t)));
    }
    out.push_back(make_report(
        "de_spectral_vs_closed",
        {{"r", fmt(r)}, {"alpha", fmt(pi / 4.0)}, {"N", fmt(n)}}, max_dev,
        de_spectral_tail_bound(spec, n) + 1e-10, start));
  }

  for (double r : {0.5, 0.9}) {
    auto start = Clock::now();
    const int n = 60;
    double max_dev = 0.0;
    double max_mag = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double u = -pi + two_pi * i / 100.0;
      const double closed = poisson_kernel(r, u);
      max_mag = std::max(max_mag, std::abs(closed));
      max_dev = std::max(max_dev,
                         std::abs(poisson_kernel_spectral(r, u, n) - closed));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    out.push_back(make_report(
        "poisson_spectral_vs_closed", {{"r", fmt(r)}, {"N", fmt(n)}}, max_dev,
        poisson_spectral_tail_bound(r, n) + 4.0 * eps * (1.0 + max_mag), start));
  }

  {
    auto start = Clock::now();
    const double mass = kernel_mass_inside(KernelSpec{DeSpec{1, pi / 4.0}}, pi, 32);
    out.push_back(make_report("de_normalization",
                              {{"r", fmt(1)}, {"alpha", fmt(pi / 4.0)}},
                              std::abs(mass - 1.0), 1e-10, start));
  }
  {
    auto start = Clock::now();
    const double mass = kernel_mass_inside(KernelSpec{DeSpec{3, pi / 8.0}}, pi, 32);
    out.push_back(make_report("de_normalization",
                              {{"r", fmt(3)}, {"alpha", fmt(pi / 8.0)}},
                              std::abs(mass - 1.0), 1e-10, start));
  }
  for (double r : {0.5, 0.9}) {
    auto start = Clock::now();
    const double mass = kernel_mass_inside(KernelSpec{PoissonSpec{r}}, pi, 32);
    out.push_back(make_report("poisson_normalization", {{"r", fmt(r)}},
                              std::abs(mass - 1.0), 1e-10, start));
  }
  {
    auto start = Clock::now();
    const double mass =
        kernel_mass_outside(KernelSpec{DeSpec{2, pi / 8.0}}, 0.5, 32);
    out.push_back(make_report(
        "de_mass_outside_compact_support",
        {{"r", fmt(2)}, {"alpha", fmt(pi / 8.0)}, {"delta", fmt(0.5)}},
        std::abs(mass), 0.0, start));
  }
}

void suite_engine(std::vector<VerificationReport>& out) {
  // Spectral sum against the convolution integral.
  for (const char* which : {"square", "sawtooth"}) {
    auto start = Clock::now();
    const FunctionSpec fn = which == std::string("square")
                                ? FunctionSpec::square_wave()
                                : FunctionSpec::sawtooth();
    const DeSpec spec{2, pi / 8.0};
    const int n = 2048;
    const GridFunction g = summed_function(fn, SigmaRAlpha{spec.r, spec.alpha},
                                           n, 64);
    double max_dev = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double t = grid_point(j, g.size());
      max_dev = std::max(max_dev, std::abs(g.samples[j] -
                                           convolve_with_kernel(fn, KernelSpec{spec}, t, 24)));
    }
    const double env = which == std::string("square") ? 4.0 / pi : 2.0;
    // |a_k|,|b_k| <= env/k, so the truncation tail is env*sum_{k>N} sigma_k/k.
    CompensatedSum tail;
    for (int k = n + 1; k <= 200000; ++k) {
      tail.add(std::min(1.0, std::pow(2.0 / (k * spec.alpha), spec.r)) / k);
    }
    const double bound = env * (tail.value() +
                                std::pow(2.0 / spec.alpha, spec.r) /
                                    (spec.r * std::pow(200000.0, spec.r))) +
                         1e-8;
    out.push_back(make_report("spectral_vs_convolution",
                              {{"fn", which},
                               {"r", fmt(spec.r)},
                               {"alpha", fmt(spec.alpha)},
                               {"N", fmt(n)}},
                              max_dev, bound, start));
  }

  // Poisson route: trapezoid convolution against the factored sum. N is
  // small enough that the geometric tail dominates the O(1/M) trapezoid
  // error on discontinuous inputs.
  {
    auto start = Clock::now();
    const FunctionSpec fn = FunctionSpec::square_wave();
    const double r = 0.5;
    const int n = 10;
    const int m_q = 1 << 17;
    const GridFunction g = summed_function(fn, PoissonAbel{r}, n, 16);
    double max_dev = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double t = grid_point(j, g.size());
      max_dev = std::max(max_dev, std::abs(g.samples[j] -
                                           convolve_with_kernel(fn, KernelSpec{PoissonSpec{r}}, t, m_q)));
    }
    const double bound =
        (4.0 / pi) * poisson_spectral_tail_bound(r, n) + 2e-4;
    out.push_back(make_report(
        "poisson_spectral_vs_convolution",
        {{"fn", "square"}, {"r", fmt(r)}, {"N", fmt(n)}, {"Mq", fmt(m_q)}},
        max_dev, bound, start));
  }
}

void suite_analysis(std::vector<VerificationReport>& out) {
  for (int r : {1, 2, 3, 4, 5}) {
    out.push_back(coefficient_roundtrip(r, pi / 4.0, 64));
  }

  {
    auto sq = jump_convergence_study(FunctionSpec::square_wave(), 2,
                                     {pi / 4.0, pi / 8.0, pi / 16.0}, 0.0);
    out.insert(out.end(), sq.begin(), sq.end());
    auto st = jump_convergence_study(FunctionSpec::sawtooth(), 2,
                                     {pi / 4.0, pi / 8.0, pi / 16.0}, pi);
    out.insert(out.end(), st.begin(), st.end());
  }

  {
    auto start = Clock::now();
    const double m1 = kernel_mass_outside(KernelSpec{PoissonSpec{0.9}}, 0.5, 32);
    const double m2 = kernel_mass_outside(KernelSpec{PoissonSpec{0.99}}, 0.5, 32);
    const double m3 = kernel_mass_outside(KernelSpec{PoissonSpec{0.999}}, 0.5, 32);
    out.push_back(make_report("poisson_mass_monotone",
                              {{"delta", fmt(0.5)}},
                              std::max(m2 - m1, m3 - m2), 0.0, start));
    start = Clock::now();
    out.push_back(make_report("poisson_mass_outside",
                              {{"r", fmt(0.999)}, {"delta", fmt(0.5)}}, m3,
                              0.01, start));
  }

  {
    auto start = Clock::now();
    const FunctionSpec fn = FunctionSpec::square_wave();
    const double baseline = gibbs_overshoot(fn, Identity{}, 511, 8192);
    // Raw partial-sum overshoot of a unit jump: 2*Si(pi)/pi - 1.
    const double si_pi = integrate([](double x) { return sinc(x); }, 0.0, pi, 64);
    const double wilbraham = 2.0 * si_pi / pi - 1.0;
    out.push_back(make_report("gibbs_identity_baseline",
                              {{"N", fmt(511)}, {"M", fmt(8192)}},
                              std::abs(baseline - wilbraham), 0.01, start));

    start = Clock::now();
    const double smoothed =
        gibbs_overshoot(fn, SigmaRAlpha{2, pi / 16.0}, 511, 8192);
    out.push_back(make_report(
        "gibbs_smoothing",
        {{"r", fmt(2)}, {"alpha", fmt(pi / 16.0)}, {"N", fmt(511)}}, smoothed,
        0.01, start));

    start = Clock::now();
    out.push_back(make_report(
        "gibbs_smoothing_vs_identity",
        {{"r", fmt(2)}, {"alpha", fmt(pi / 16.0)}, {"N", fmt(511)}},
        smoothed - baseline, 0.0, start));
  }
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& suite) {
  std::vector<VerificationReport> out;
  const bool all = suite == "all";
  if (all || suite == "splines") suite_splines(out);
  if (all || suite == "kernels") suite_kernels(out);
  if (all || suite == "engine") suite_engine(out);
  if (all || suite == "analysis") suite_analysis(out);
  if (out.empty()) {
    throw std::invalid_argument(
        "run_suite: unknown suite '" + suite +
        "' (expected splines, kernels, engine, analysis, or all)");
  }
  std::sort(out.begin(), out.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              if (a.name != b.name) return a.name < b.name;
              return a.parameters < b.parameters;
            });
  return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) {
    nlohmann::ordered_json item;
    item["name"] = r.name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.parameters) params[key] = value;
    item["parameters"] = params;
    item["observed"] = r.observed;
    item["bound"] = r.bound;
    item["passed"] = r.passed;
    arr.push_back(item);
  }
  return arr.dump(2) + "\n";
}

}  // namespace trigsum
