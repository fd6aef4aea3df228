#pragma once

#include <span>

#include "wm/census.hpp"
#include "wm/potential.hpp"

namespace wm {

/// Pseudo-cylindric (Yamabe) reduction on S^1(T) x S^{n-1}:
///   u'' - (n-2)^2/4 u + n(n-2)/4 u^{(n+2)/(n-2)} = 0,
/// written as u'' + phi(u) = 0 with phi(u) = n(n-2)/4 u^{(n+2)/(n-2)} - (n-2)^2/4 u.
struct YamabeSystem {
  int n = 0;
  PotentialSystem system;
  /// ((n-2)/n)^{(n-2)/4}; the cylinder metric itself.
  double constant_solution = 0.0;
};

YamabeSystem yamabe_system(int n);

/// 2 pi / sqrt(n-2): below this circle length only the constant solution exists.
double yamabe_threshold(int n);

/// Same counting rule as census() with the linear period 2 pi / sqrt(n-2);
/// families are verified by orbit closure and the finite-difference residual.
MetricCensus yamabe_census(int n, double length, const CensusOptions& opts = {});

/// Uniform closed-grid samples of u over one circle length.
struct YamabeProfile {
  std::vector<double> t;
  std::vector<double> u;
  std::vector<double> u1;
};

YamabeProfile yamabe_profile(int n, double c, double length, std::size_t intervals,
                             const CensusOptions& opts = {});

/// sup |u''_fd - (n-2)^2/4 u + n(n-2)/4 u^{(n+2)/(n-2)}| with u'' from
/// periodic second differences on a closed uniform grid (t_0 = 0, t_m = T).
double yamabe_residual(std::span<const double> t, std::span<const double> u, int n);

}  // namespace wm
