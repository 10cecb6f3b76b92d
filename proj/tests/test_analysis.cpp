#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "trigsum/analysis.hpp"
#include "trigsum/periodic.hpp"
#include "trigsum/quadrature.hpp"
#include "trigsum/splines.hpp"

using namespace trigsum;

namespace {

TrigSeries shifted_square_series(int n, double shift) {
  auto s = fourier_coefficients(FunctionSpec::square_wave(), n);
  TrigSeries out = s;
  for (std::size_t k = 1; k <= s.order(); ++k) {
    double c = std::cos(k * shift), sn = std::sin(k * shift);
    out.a[k - 1] = s.a[k - 1] * c - s.b[k - 1] * sn;
    out.b[k - 1] = s.b[k - 1] * c + s.a[k - 1] * sn;
  }
  return out;
}

}  // namespace

TEST_CASE("kernel mass outside delta") {
  // compact support strictly inside |t| <= delta: exactly zero, no quadrature
  CHECK(kernel_mass_outside(KernelSpec{DeSpec{2, pi / 8}}, 0.5, 32) == 0.0);
  // box of width 1.5 sticking out of |t| <= 0.5 by 0.25 on each side
  CHECK(kernel_mass_outside(KernelSpec{DeSpec{1, 1.5}}, 0.5, 32) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(kernel_mass_outside(KernelSpec{PoissonSpec{0.999}}, 0.5, 32) < 0.01);
  CHECK_THROWS_AS(kernel_mass_outside(KernelSpec{DeSpec{2, 0.5}}, 0.0, 32),
                  std::domain_error);
}

TEST_CASE("inside and outside mass sum to one") {
  for (KernelSpec spec : {KernelSpec{DeSpec{2, pi / 4}}, KernelSpec{DeSpec{1, 1.5}},
                          KernelSpec{PoissonSpec{0.9}}, KernelSpec{PoissonSpec{0.999}}}) {
    for (double delta : {0.3, 0.5}) {
      double total = kernel_mass_inside(spec, delta, 32) +
                     kernel_mass_outside(spec, delta, 32);
      CHECK(std::abs(total - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("poisson mass concentrates as r rises") {
  double m1 = kernel_mass_outside(KernelSpec{PoissonSpec{0.9}}, 0.5, 32);
  double m2 = kernel_mass_outside(KernelSpec{PoissonSpec{0.99}}, 0.5, 32);
  double m3 = kernel_mass_outside(KernelSpec{PoissonSpec{0.999}}, 0.5, 32);
  CHECK(m2 < m1);
  CHECK(m3 < m2);
  CHECK(m3 < 0.01);
}

TEST_CASE("jump convergence at the built-in jumps") {
  const std::vector<double> alphas = {pi / 4, pi / 8, pi / 16};

  auto saw = jump_convergence_study(FunctionSpec::sawtooth(), 2, alphas, pi);
  REQUIRE(saw.size() == 3);
  for (const auto& r : saw) {
    CHECK(r.observed <= 1e-10);
    CHECK(r.passed);
  }

  auto sq = jump_convergence_study(FunctionSpec::square_wave(), 3, alphas, 0.0);
  for (const auto& r : sq) CHECK(r.observed <= 1e-10);

  // error sequence non-increasing for the built-ins
  auto sq2 = jump_convergence_study(FunctionSpec::square_wave(), 2, alphas, 0.0);
  for (std::size_t i = 1; i < sq2.size(); ++i) {
    CHECK(sq2[i].observed <= sq2[i - 1].observed + 1e-15);
  }

  CHECK_THROWS_AS(jump_convergence_study(FunctionSpec::square_wave(), 2, alphas, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(jump_convergence_study(FunctionSpec::square_wave(), 2,
                                         {pi / 8, pi / 4}, 0.0),
                  std::domain_error);
}

TEST_CASE("jump convergence for a shifted square wave") {
  auto fn = FunctionSpec::from_series(shifted_square_series(1024, 1.0),
                                      {{1.0, -1.0, 1.0}});
  auto reports = jump_convergence_study(fn, 2, {pi / 4, pi / 8, pi / 16}, 1.0);
  for (const auto& r : reports) CHECK(r.observed <= 1e-10);
}

TEST_CASE("coefficient roundtrip against the factors") {
  auto rep = coefficient_roundtrip(2, pi / 4, 64);
  CHECK(rep.observed < 1e-10);
  CHECK(rep.passed);
  CHECK(rep.bound == 1e-10);

  auto box = coefficient_roundtrip(1, pi / 2, 8);
  CHECK(box.observed < 1e-10);
}

TEST_CASE("exact integration oracle agrees with the analytic coefficients") {
  // Dual route: truncated powers integrated termwise in long double vs the
  // sinc-power closed form.
  for (int r = 1; r <= 5; ++r) {
    const double alpha = pi / 8;
    const BSpline b{r - 1, alpha};
    for (int k = 0; k <= 32; ++k) {
      double exact = (double)oracles::bspline_fourier_exact(r - 1, alpha, k);
      CHECK(std::abs(exact - bspline_fourier_coefficient(b, k)) < 1e-12);
    }
  }
}

TEST_CASE("gibbs overshoot") {
  auto sq = FunctionSpec::square_wave();
  const double baseline = gibbs_overshoot(sq, Identity{}, 511, 8192);
  const double si_pi = integrate([](double x) { return sinc(x); }, 0.0, pi, 64);
  const double wilbraham = 2.0 * si_pi / pi - 1.0;
  CHECK(std::abs(baseline - wilbraham) < 0.01);

  const double smoothed = gibbs_overshoot(sq, SigmaRAlpha{2, pi / 16}, 511, 8192);
  CHECK(smoothed < 0.01);
  CHECK(smoothed < baseline);

  // Lanczos-style single sinc power also beats the raw partial sum.
  const double lanczos_like = gibbs_overshoot(sq, SigmaRAlpha{1, two_pi / 512}, 511, 8192);
  CHECK(lanczos_like < baseline);

  CHECK_THROWS_AS(gibbs_overshoot(sq, Identity{}, 511, 1024), std::domain_error);
}

TEST_CASE("verification suite is green and deterministic") {
  auto reports = run_suite("all");
  CHECK(!reports.empty());
  for (const auto& r : reports) {
    INFO(r.name << " observed=" << r.observed << " bound=" << r.bound);
    CHECK(r.passed);
    CHECK(r.passed == (r.observed <= r.bound));
    CHECK(r.runtime_ms >= 0.0);
  }
  auto again = run_suite("all");
  CHECK(reports_to_json(reports) == reports_to_json(again));

  CHECK(!run_suite("splines").empty());
  CHECK_THROWS_AS(run_suite("nonsense"), std::invalid_argument);
}
