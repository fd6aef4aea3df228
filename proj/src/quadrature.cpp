#include "wm/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wm/errors.hpp"

namespace wm {
namespace {

GaussRule build_rule(std::size_t order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const std::size_t half = (order + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_order.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= order; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t order) {
  static const std::array<GaussRule, 9> rules = [] {
    std::array<GaussRule, 9> r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = build_rule(std::size_t{4} << i);
    return r;
  }();
  for (std::size_t i = 0; i < rules.size(); ++i)
    if ((std::size_t{4} << i) == order) return rules[i];
  throw ParameterError("gauss_legendre: unsupported order " + std::to_string(order));
}

}  // namespace wm
