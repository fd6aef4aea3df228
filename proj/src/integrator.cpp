#include "wm/integrator.hpp"

#include <cmath>

#include "wm/errors.hpp"

namespace wm {

SymplecticStepper::SymplecticStepper(int order) : order_(order) {
  if (order < 2 || order > 8 || order % 2 != 0)
    throw ParameterError("symplectic order must be one of 2, 4, 6, 8");
  weights_ = {1.0};
  for (int k = 1; 2 * k < order; ++k) {
    const double w1 = 1.0 / (2.0 - std::pow(2.0, 1.0 / (2 * k + 1)));
    const double w0 = 1.0 - 2.0 * w1;
    std::vector<double> next;
    next.reserve(3 * weights_.size());
    for (double f : {w1, w0, w1})
      for (double w : weights_) next.push_back(f * w);
    weights_ = std::move(next);
  }
}

}  // namespace wm
