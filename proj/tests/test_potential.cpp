#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wm/derdzinski.hpp"
#include "wm/errors.hpp"
#include "wm/potential.hpp"
#include "wm/roots.hpp"

using namespace wm;

namespace {

// G written out by hand for the normalized force f - f^{1-4/n}.
double potential_closed_form(int n, double f) {
  const double m = n;
  return f * f / 2.0 - m / (2.0 * (m - 2.0)) * std::pow(f, 2.0 * (m - 2.0) / m) + 1.0 / (m - 2.0);
}

}  // namespace

TEST_CASE("normalized system: center, critical energy and linear period") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    const PotentialSystem sys = normalized_system(n);
    CHECK(sys.center() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sys.c_max() == doctest::Approx(1.0 / (n - 2.0)).epsilon(1e-14));
    CHECK(sys.stiffness() == doctest::Approx(4.0 / n).epsilon(1e-14));
    CHECK(sys.linear_period() == doctest::Approx(std::numbers::pi * std::sqrt(n)).epsilon(1e-14));
    CHECK(sys.is_linear() == (n == 4));
  }
}

TEST_CASE("potential matches the closed form and its differences stay accurate") {
  for (int n : {3, 5, 6, 10}) {
    const PotentialSystem sys = normalized_system(n);
    for (double f : {0.05, 0.3, 0.9, 1.0, 1.2, 2.5}) {
      CAPTURE(n);
      CAPTURE(f);
      CHECK(sys.potential(f) == doctest::Approx(potential_closed_form(n, f)).epsilon(1e-12).scale(1.0));
      CHECK(sys.depth(f) == doctest::Approx(sys.c_max() - sys.potential(f)).epsilon(1e-12).scale(1.0));
    }
    // Tiny increments: the rise is the force times the step.
    for (double f : {0.4, 1.0 + 1e-6, 1.7}) {
      const double dx = 1e-9;
      const double rise = sys.potential_rise(f, dx);
      const double expected = dx * sys.force(f + 0.5 * dx);
      CHECK(std::abs(rise - expected) <= 1e-12 * std::abs(dx) + 1e-24);
    }
  }
}

TEST_CASE("force derivatives agree with finite differences") {
  const PotentialSystem sys = normalized_system(7);
  for (double x : {0.2, 0.8, 1.3}) {
    const double h = 1e-5;
    const double slope = (sys.force(x + h) - sys.force(x - h)) / (2 * h);
    const double curv = (sys.force_slope(x + h) - sys.force_slope(x - h)) / (2 * h);
    CHECK(sys.force_slope(x) == doctest::Approx(slope).epsilon(1e-8));
    CHECK(sys.force_curvature(x) == doctest::Approx(curv).epsilon(1e-7));
  }
}

TEST_CASE("positivity and term validation") {
  const PotentialSystem sys = normalized_system(5);
  CHECK_THROWS_AS(sys.force(0.0), PositivityError);
  CHECK_THROWS_AS(sys.potential(-1.0), PositivityError);
  CHECK_THROWS_AS(PotentialSystem("bad", {{1.0, 1.0}, {1.0, 0.5}}), ParameterError);
  CHECK_THROWS_AS(PotentialSystem("bad", {{1.0, 1.0}, {-1.0, -1.5}}), ParameterError);
  CHECK_THROWS_AS(normalized_system(2), ParameterError);
}

TEST_CASE("constant solution alpha by root finding") {
  const ModelParams p{5, 16.0, 1.0};
  const DerivedParams d = derive_params(p);
  CHECK(d.alpha == doctest::Approx(std::pow(4.0, 1.25)).epsilon(1e-14));
  CHECK(d.beta == doctest::Approx(std::sqrt(5.0 / 4.0)).epsilon(1e-15));
  CHECK(d.c0 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(d.min_period == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));

  // alpha^{4/n} = R / ((n-1) C) over a spread of parameters.
  for (int n : {3, 4, 6, 9}) {
    for (double R : {0.5, 3.0, 40.0}) {
      for (double C : {0.25, 1.0, 7.0}) {
        const DerivedParams dd = derive_params({n, R, C});
        CHECK(std::pow(dd.alpha, 4.0 / n) == doctest::Approx(R / ((n - 1) * C)).epsilon(1e-13));
        CHECK(raw_system({n, R, C}).force(dd.alpha) == doctest::Approx(0.0).scale(dd.alpha * C));
      }
    }
  }
}

TEST_CASE("printed constant forms are reported separately from alpha") {
  const PrintedConstantForms f = printed_constant_forms({5, 16.0, 1.0});
  CHECK(f.introduction == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f.bifurcation == doctest::Approx(std::pow(20.0, 1.25)).epsilon(1e-14));
}

TEST_CASE("raw energy scales with alpha^2 beta^2") {
  const ModelParams p{6, 10.0, 2.0};
  const DerivedParams d = derive_params(p);
  const PotentialSystem raw = raw_system(p);
  const PotentialSystem norm = normalized_system(6);
  CHECK(raw.c_max() == doctest::Approx(raw_energy(d, norm.c_max())).epsilon(1e-12));
  const double f = 1.4;
  CHECK(raw.potential(d.alpha * f) == doctest::Approx(raw_energy(d, norm.potential(f))).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(derive_params({2, 1.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(derive_params({5, -1.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(derive_params({5, 1.0, 0.0}), ParameterError);
  CHECK_THROWS_AS(derive_params({5, 1.0, std::nan("")}), ParameterError);
}

TEST_CASE("bracketed root solver") {
  const double r = solve_bracketed([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  CHECK(r == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK_THROWS_AS(solve_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0), BracketError);
}
