#include "trigsum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "trigsum/compensated.hpp"
#include "trigsum/periodic.hpp"

namespace trigsum {

GaussLegendre::GaussLegendre(int n) {
  if (n < 1 || n > 128) {
    throw std::domain_error("GaussLegendre: node count must be in [1, 128]");
  }
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Mirror fill so the node set is exactly symmetric.
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, GaussLegendre(n)).first;
  }
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int n_nodes) {
  const GaussLegendre& rule = gauss_legendre(n_nodes);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  CompensatedSum s;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
  }
  return half * s.value();
}

namespace {

std::vector<double> clean_breakpoints(std::vector<double> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) {
                          return std::abs(a - b) < 1e-14;
                        }),
            pts.end());
  if (pts.size() < 2) {
    throw std::domain_error("integrate_panels: need at least two breakpoints");
  }
  return pts;
}

}  // namespace

double integrate_panels(const std::function<double(double)>& f,
                        std::vector<double> breakpoints, int n_nodes) {
  auto pts = clean_breakpoints(std::move(breakpoints));
  CompensatedSum s;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    s.add(integrate(f, pts[i], pts[i + 1], n_nodes));
  }
  return s.value();
}

double integrate_panels_split(const std::function<double(double)>& f,
                              std::vector<double> breakpoints, int n_nodes,
                              double max_width) {
  auto pts = clean_breakpoints(std::move(breakpoints));
  if (!(max_width > 0.0)) {
    throw std::domain_error("integrate_panels_split: max_width must be positive");
  }
  CompensatedSum s;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i], b = pts[i + 1];
    int parts = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
    for (int p = 0; p < parts; ++p) {
      double lo = a + (b - a) * p / parts;
      double hi = a + (b - a) * (p + 1) / parts;
      s.add(integrate(f, lo, hi, n_nodes));
    }
  }
  return s.value();
}

}  // namespace trigsum
