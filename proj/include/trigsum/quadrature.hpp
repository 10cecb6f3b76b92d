#pragma once

#include <functional>
#include <vector>

namespace trigsum {

// Gauss-Legendre nodes and weights on [-1, 1], symmetric about 0.
struct GaussLegendre {
  explicit GaussLegendre(int n);
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached rule; n in [1, 128].
const GaussLegendre& gauss_legendre(int n);

double integrate(const std::function<double(double)>& f, double a, double b,
                 int n_nodes);

// Composite rule over consecutive breakpoint intervals. Breakpoints are
// sorted and deduplicated first.
double integrate_panels(const std::function<double(double)>& f,
                        std::vector<double> breakpoints, int n_nodes);

// Same, but each panel is further subdivided so no sub-panel exceeds
// max_width (for oscillatory integrands).
double integrate_panels_split(const std::function<double(double)>& f,
                              std::vector<double> breakpoints, int n_nodes,
                              double max_width);

}  // namespace trigsum
