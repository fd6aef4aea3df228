#pragma once

#include <cstddef>
#include <vector>

#include "wm/derdzinski.hpp"
#include "wm/period_map.hpp"
#include "wm/potential.hpp"

namespace wm {

struct OrbitSample {
  double t = 0.0;
  double x = 0.0;
  double v = 0.0;
};

/// Closed phase-plane orbit of energy c, started at the right turning point.
struct Orbit {
  double c = 0.0;
  double period = 0.0;
  std::vector<OrbitSample> samples;
  /// max |v^2/2 + G(x) - c| over all steps.
  double energy_drift = 0.0;
  /// |(x, v)(end) - (b, 0)| after the integrated number of periods.
  double closure_distance = 0.0;
};

struct OrbitOptions {
  long steps_per_period = 4096;
  int order = 4;
  int periods = 1;
  /// Keep every record_stride-th step in Orbit::samples.
  long record_stride = 1;
  double closure_tol = 1e-8;
  /// Throw ClosureError when the end state misses the start by more than closure_tol.
  bool require_closure = true;
  PeriodOptions period;
};

Orbit integrate_orbit(const PotentialSystem& sys, double c, const OrbitOptions& opts = {});

/// Orbit sampled at `intervals + 1` uniform times over [0, duration] (system time).
struct SampledOrbit {
  std::vector<double> tau;
  std::vector<double> x;
  std::vector<double> v;
  double energy_drift = 0.0;
  /// |(x, v)(duration) - (x, v)(0)|.
  double closure_distance = 0.0;
};

struct SamplingOptions {
  int order = 8;
  /// Lower bound on integrator steps per minimal period.
  long min_steps_per_period = 4096;
};

/// Integrates from an arbitrary phase-plane state; `period` only sizes the step.
SampledOrbit sample_orbit(const PotentialSystem& sys, double x0, double v0, double period,
                          double duration, std::size_t intervals, const SamplingOptions& opts = {});

/// Unique energy whose minimal period equals `target_period` (system time).
/// The period map is inverted on log(c) by bracketed root finding; it may be
/// increasing or decreasing, but must be strictly monotone.
/// Throws TargetUnattainableError when the target lies outside the range swept
/// by (0, cutoff * c_max) and for isochronous (linear) systems.
double energy_for_period(const PotentialSystem& sys, double target_period,
                         const PeriodOptions& opts = {});

/// Circle length at which the k-th nonconstant branch leaves the constant solution.
struct BifurcationPoint {
  int k = 0;
  double length = 0.0;
  double constant_value = 0.0;
};

/// (k, 2 pi k / sqrt(C), alpha) for k = 1..k_max.
std::vector<BifurcationPoint> bifurcation_points(const ModelParams& params, int k_max);

}  // namespace wm
