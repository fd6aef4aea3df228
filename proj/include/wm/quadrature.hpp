#pragma once

#include <cstddef>
#include <vector>

namespace wm {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule; `order` must be a power of two in [4, 1024].
const GaussRule& gauss_legendre(std::size_t order);

/// Panel-wise Gauss-Legendre of `f` over the ordered breakpoints.
template <class F>
double gauss_panels(F&& f, const std::vector<double>& breaks, const GaussRule& rule) {
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double half = 0.5 * (breaks[p + 1] - breaks[p]);
    const double mid = 0.5 * (breaks[p + 1] + breaks[p]);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    total += half * s;
  }
  return total;
}

}  // namespace wm
