#include "wm/orbit.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wm/errors.hpp"
#include "wm/integrator.hpp"
#include "wm/roots.hpp"

namespace wm {

Orbit integrate_orbit(const PotentialSystem& sys, double c, const OrbitOptions& opts) {
  if (opts.steps_per_period < 1 || opts.periods < 1 || opts.record_stride < 1)
    throw ParameterError("orbit options: steps, periods and stride must be positive");
  const PeriodSample ps = period(sys, c, opts.period);
  const SymplecticStepper stepper(opts.order);
  const double b = ps.turning.b;

  Orbit orbit;
  orbit.c = c;
  orbit.period = ps.period;
  const double dt = ps.period / static_cast<double>(opts.steps_per_period);
  const long total = opts.steps_per_period * opts.periods;

  double x = b, v = 0.0;
  auto force = [&](double y) { return sys.force(y); };
  double f = force(x);
  orbit.samples.push_back({0.0, x, v});
  for (long step = 1; step <= total; ++step) {
    stepper.advance(x, v, f, dt, 1, force);
    // The orbit's own energy is G(b); measured as a rise from b it keeps full precision.
    const double drift = std::abs(0.5 * v * v + sys.potential_rise(b, x - b));
    orbit.energy_drift = std::max(orbit.energy_drift, drift);
    if (step % opts.record_stride == 0 || step == total)
      orbit.samples.push_back({dt * static_cast<double>(step), x, v});
  }
  orbit.closure_distance = std::hypot(x - b, v);
  if (opts.require_closure && !(orbit.closure_distance <= opts.closure_tol)) {
    std::ostringstream os;
    os << sys.name() << ": orbit at c = " << c << " misses closure by " << orbit.closure_distance;
    throw ClosureError(os.str(), orbit.closure_distance);
  }
  return orbit;
}

SampledOrbit sample_orbit(const PotentialSystem& sys, double x0, double v0, double period,
                          double duration, std::size_t intervals, const SamplingOptions& opts) {
  if (intervals < 1 || !(duration > 0.0) || !(period > 0.0))
    throw ParameterError("sample_orbit: duration, period and interval count must be positive");
  const SymplecticStepper stepper(opts.order);
  const double needed = static_cast<double>(opts.min_steps_per_period) * duration / period;
  const long sub = std::max(1L, static_cast<long>(std::ceil(needed / static_cast<double>(intervals))));
  const double dt_sample = duration / static_cast<double>(intervals);
  const double dt = dt_sample / static_cast<double>(sub);

  SampledOrbit out;
  out.tau.reserve(intervals + 1);
  out.x.reserve(intervals + 1);
  out.v.reserve(intervals + 1);
  double x = x0, v = v0;
  auto force = [&](double y) { return sys.force(y); };
  double f = force(x);
  out.tau.push_back(0.0);
  out.x.push_back(x);
  out.v.push_back(v);
  const double e0 = 0.5 * v0 * v0;
  for (std::size_t i = 1; i <= intervals; ++i) {
    stepper.advance(x, v, f, dt, sub, force);
    out.tau.push_back(dt_sample * static_cast<double>(i));
    out.x.push_back(x);
    out.v.push_back(v);
    out.energy_drift = std::max(out.energy_drift, std::abs(0.5 * v * v - e0 + sys.potential_rise(x0, x - x0)));
  }
  out.closure_distance = std::hypot(x - x0, v - v0);
  return out;
}

double energy_for_period(const PotentialSystem& sys, double target_period, const PeriodOptions& opts) {
  using Side = TargetUnattainableError::Side;
  if (!(target_period > 0.0) || !std::isfinite(target_period))
    throw ParameterError("target period must be positive and finite");
  const double t_lin = sys.linear_period();
  if (sys.is_linear()) {
    std::ostringstream os;
    os << sys.name() << ": every orbit has period " << t_lin << "; the energy is not determined";
    throw TargetUnattainableError(Side::isochronous, os.str());
  }

  const double c_hi = opts.energy_cutoff * sys.c_max();
  const double t_hi = period(sys, c_hi, opts).period;
  const bool increasing = t_hi > t_lin;
  // Attainable: strictly beyond the zero-energy limit, up to the cutoff period.
  const bool past_linear = increasing ? target_period <= t_lin : target_period >= t_lin;
  const bool past_cutoff = increasing ? target_period > t_hi : target_period < t_hi;
  if (past_linear || past_cutoff) {
    std::ostringstream os;
    os << sys.name() << ": period " << target_period << " outside the attainable range between "
       << t_lin << " (zero energy) and " << t_hi << " (cutoff energy)";
    throw TargetUnattainableError(past_linear ? Side::below_minimum : Side::above_cutoff, os.str());
  }

  auto f = [&](double y) { return period(sys, std::min(c_hi, std::exp(y)), opts).period - target_period; };
  const double y_hi = std::log(c_hi);
  double y_lo = std::log(sys.c_max() * 1e-12);
  // Targets hugging the linear period need tiny energies.
  while (std::signbit(f(y_lo)) == std::signbit(f(y_hi))) {
    y_lo -= 10.0;
    if (y_lo < -690.0) return std::exp(y_lo + 10.0);
  }
  const double c = std::min(c_hi, std::exp(solve_bracketed(f, y_lo, y_hi, 0.0, 1e-15)));
  const double miss = std::abs(period(sys, c, opts).period - target_period);
  if (miss > 1e-9) {
    std::ostringstream os;
    os << sys.name() << ": period inversion missed target " << target_period << " by " << miss;
    throw AccuracyError(os.str(), miss);
  }
  return c;
}

std::vector<BifurcationPoint> bifurcation_points(const ModelParams& params, int k_max) {
  const DerivedParams d = derive_params(params);
  std::vector<BifurcationPoint> out;
  for (int k = 1; k <= k_max; ++k)
    out.push_back({k, 2.0 * std::numbers::pi * k / std::sqrt(params.constant), d.alpha});
  return out;
}

}  // namespace wm
