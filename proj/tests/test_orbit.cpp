#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wm/derdzinski.hpp"
#include "wm/errors.hpp"
#include "wm/integrator.hpp"
#include "wm/orbit.hpp"

using namespace wm;
using std::numbers::pi;

namespace {

double drift_with(int order, long steps, int periods = 100) {
  OrbitOptions o;
  o.order = order;
  o.steps_per_period = steps;
  o.periods = periods;
  o.record_stride = steps;
  o.require_closure = false;
  return integrate_orbit(normalized_system(5), 0.2, o).energy_drift;
}

}  // namespace

TEST_CASE("composition weights") {
  for (int order : {2, 4, 6, 8}) {
    const SymplecticStepper s(order);
    double sum = 0.0;
    for (double w : s.weights()) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.weights().size() == static_cast<std::size_t>(std::pow(3, order / 2 - 1)));
  }
  CHECK_THROWS_AS(SymplecticStepper(3), ParameterError);
  CHECK_THROWS_AS(SymplecticStepper(10), ParameterError);
}

TEST_CASE("harmonic oscillator: Verlet reproduces the exact flow to second order") {
  const SymplecticStepper s(2);
  auto err_for = [&](long steps) {
    double x = 1.0, v = 0.0;
    double f = x;
    s.advance(x, v, f, 2 * pi / steps, steps, [](double y) { return y; });
    return std::hypot(x - 1.0, v);
  };
  const double ratio = err_for(100) / err_for(200);
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("energy drift over 100 periods at n = 5, c = 0.2") {
  CHECK(drift_with(4, 4096) < 1e-9);
  // Step halving in the truncation-dominated regime.
  for (int order : {2, 4, 6}) {
    CAPTURE(order);
    const long steps = order == 6 ? 32 : 64;
    const double ratio = drift_with(order, steps) / drift_with(order, 2 * steps);
    const double expected = std::pow(2.0, order);
    CHECK(ratio > 0.7 * expected);
    CHECK(ratio < 1.4 * expected);
  }
}

TEST_CASE("one period closes the orbit") {
  for (int n : {3, 5, 6, 10}) {
    const PotentialSystem sys = normalized_system(n);
    OrbitOptions o;
    o.record_stride = 64;
    for (double frac : {0.05, 0.5, 0.9}) {
      const Orbit orbit = integrate_orbit(sys, frac * sys.c_max(), o);
      CAPTURE(n);
      CAPTURE(frac);
      CHECK(orbit.closure_distance < 1e-8);
      CHECK(std::abs(orbit.samples.back().x - orbit.samples.front().x) < 1e-8);
      CHECK(orbit.samples.back().t == doctest::Approx(orbit.period).epsilon(1e-14));
    }
  }
}

TEST_CASE("closure failure is reported") {
  OrbitOptions o;
  o.steps_per_period = 16;
  o.order = 2;
  CHECK_THROWS_AS(integrate_orbit(normalized_system(5), 0.3, o), ClosureError);
}

TEST_CASE("sampled orbit matches the stepper end state and closes after whole periods") {
  const PotentialSystem sys = normalized_system(6);
  const PeriodSample ps = period(sys, 0.2);
  const SampledOrbit s = sample_orbit(sys, ps.turning.b, 0.0, ps.period, 3 * ps.period, 300);
  CHECK(s.x.size() == 301);
  CHECK(s.closure_distance < 1e-10);
  CHECK(s.energy_drift < 1e-12);
  // Turning points are reached at half periods.
  CHECK(s.x[50] == doctest::Approx(ps.turning.a).epsilon(1e-9));
  double lo = s.x[0];
  for (double x : s.x) lo = std::min(lo, x);
  CHECK(lo >= ps.turning.a - 1e-9);
}

TEST_CASE("energy for a prescribed period") {
  const PotentialSystem five = normalized_system(5);
  for (double target : {7.03, 7.2, 7.5, 7.8}) {
    const double c = energy_for_period(five, target);
    CHECK(period(five, c).period == doctest::Approx(target).epsilon(1e-12));
  }
  CHECK_THROWS_AS(energy_for_period(five, 6.0), TargetUnattainableError);
  try {
    energy_for_period(five, 7.9);
    FAIL("expected TargetUnattainableError");
  } catch (const TargetUnattainableError& e) {
    CHECK(e.side() == TargetUnattainableError::Side::above_cutoff);
  }

  // n = 3: the period decreases with energy, so targets lie below pi sqrt(3).
  const PotentialSystem three = normalized_system(3);
  const double t_lin = three.linear_period();
  const double c = energy_for_period(three, 0.95 * t_lin);
  CHECK(period(three, c).period == doctest::Approx(0.95 * t_lin).epsilon(1e-12));
  try {
    energy_for_period(three, 1.5 * t_lin);
    FAIL("expected TargetUnattainableError");
  } catch (const TargetUnattainableError& e) {
    CHECK(e.side() == TargetUnattainableError::Side::below_minimum);
  }

  try {
    energy_for_period(normalized_system(4), 2 * pi);
    FAIL("expected TargetUnattainableError");
  } catch (const TargetUnattainableError& e) {
    CHECK(e.side() == TargetUnattainableError::Side::isochronous);
    CHECK(e.reason() == "target-isochronous");
  }
}

TEST_CASE("targets just above the linear period need tiny energies") {
  const PotentialSystem sys = normalized_system(6);
  const double target = sys.linear_period() * (1.0 + 1e-9);
  const double c = energy_for_period(sys, target);
  CHECK(c < 1e-6);
  CHECK(period(sys, c).period == doctest::Approx(target).epsilon(1e-12));
}

TEST_CASE("bifurcation lengths") {
  const auto points = bifurcation_points({5, 16.0, 4.0}, 3);
  REQUIRE(points.size() == 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(points[k - 1].k == k);
    CHECK(points[k - 1].length == doctest::Approx(pi * k).epsilon(1e-15));
    CHECK(points[k - 1].constant_value == doctest::Approx(derive_params({5, 16.0, 4.0}).alpha).epsilon(1e-15));
  }
}
