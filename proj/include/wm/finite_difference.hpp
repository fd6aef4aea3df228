#pragma once

#include <span>
#include <vector>

namespace wm {

// Centered differences on a uniform periodic grid; `values` holds one period
// without the repeated endpoint.

/// Second-order second difference (f[i+1] - 2 f[i] + f[i-1]) / dt^2.
std::vector<double> periodic_second_difference(std::span<const double> values, double dt);

/// Fourth-order stencils for the first three derivatives.
struct PeriodicDerivatives {
  std::vector<double> d1, d2, d3;
};
PeriodicDerivatives periodic_derivatives(std::span<const double> values, double dt);

/// Fourth-order interior first derivative on a non-periodic uniform grid;
/// the two outermost points on each side use second-order one-sided formulas.
std::vector<double> first_derivative(std::span<const double> values, double dt);

}  // namespace wm
