#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "wm/derdzinski.hpp"
#include "wm/errors.hpp"
#include "wm/period_map.hpp"
#include "wm/quadrature.hpp"

using namespace wm;
using std::numbers::pi;

namespace {

// Reference periods computed once with 40-digit arithmetic (mpmath quad on
// the theta-substituted integral, turning points by findroot).
struct Reference {
  int n;
  double c;
  double period;
};
constexpr Reference references[] = {
    {5, 0.1, 7.0805047780907833},
    {3, 0.5, 5.2389336837059394},
    {6, 0.2, 8.119038940541477},
    {10, 0.05, 10.221503471192916},
    {5, 0.3, 7.364048379134556},
};

// Direct double-exponential quadrature of sqrt(2) int_a^b du / sqrt(c - G(u)).
double tanh_sinh_period(const PotentialSystem& sys, double c, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto f = [&](double u) {
    const double gap = c - sys.potential(u);
    return gap > 0.0 ? 1.0 / std::sqrt(gap) : 0.0;
  };
  return std::numbers::sqrt2 * ts.integrate(f, a, b);
}

}  // namespace

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (std::size_t order : {4u, 8u, 64u, 1024u}) {
    const GaussRule& r = gauss_legendre(order);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    const int deg = static_cast<int>(std::min<std::size_t>(2 * order - 1, 21));
    double s = 0.0;
    for (std::size_t i = 0; i < order; ++i) s += r.weights[i] * std::pow(r.nodes[i], deg - 1);
    CHECK(s == doctest::Approx(2.0 / deg).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre(12), ParameterError);
}

TEST_CASE("turning points of the frozen reference") {
  const TurningPoints tp = turning_points(normalized_system(5), 0.1);
  CHECK(tp.a == doctest::Approx(0.4882572507485228).epsilon(1e-14));
  CHECK(tp.b == doctest::Approx(1.4933517888008964).epsilon(1e-14));
}

TEST_CASE("period against high-precision references") {
  for (const auto& r : references) {
    CAPTURE(r.n);
    CAPTURE(r.c);
    const PeriodSample s = period(normalized_system(r.n), r.c);
    CHECK(s.period == doctest::Approx(r.period).epsilon(1e-12));
    CHECK(s.error_estimate < 1e-9);
  }
}

TEST_CASE("period against independent tanh-sinh quadrature") {
  for (const auto& r : references) {
    const PotentialSystem sys = normalized_system(r.n);
    const TurningPoints tp = turning_points(sys, r.c);
    CHECK(tanh_sinh_period(sys, r.c, tp.a, tp.b) == doctest::Approx(period(sys, r.c).period).epsilon(1e-7));
  }
}

TEST_CASE("n = 4 is isochronous") {
  const PotentialSystem sys = normalized_system(4);
  for (int i = 1; i <= 20; ++i) {
    const double c = 0.45 * i / 20.5;
    CHECK(std::abs(period(sys, c).period - 2 * pi) < 1e-10);
  }
}

TEST_CASE("small-energy limit is pi sqrt(n)") {
  for (int n : {3, 5, 6, 10}) {
    const PeriodSample s = period(normalized_system(n), 1e-10);
    CHECK(std::abs(s.period - pi * std::sqrt(n)) < 1e-8);
  }
}

TEST_CASE("period stays below n pi / 2 as c approaches the critical energy") {
  // At c = 1/(n-2) the substitution w = f^{2/n} turns the orbit equation into a
  // harmonic oscillator, so the bounding period is n pi / 2 exactly.
  for (int n : {5, 6, 10}) {
    const PotentialSystem sys = normalized_system(n);
    double last = 0.0;
    for (double frac : {0.9, 0.99, 0.999, 0.9999, 0.99999, 0.999999}) {
      const double t = period(sys, frac * sys.c_max()).period;
      CHECK(t > last);
      CHECK(t < n * pi / 2);
      last = t;
    }
    CHECK(last > pi * std::sqrt(n));
  }
  CHECK(period(normalized_system(5), 0.999999 / 3).period == doctest::Approx(7.8416806133458685).epsilon(1e-10));
}

TEST_CASE("monotonicity: increasing for n >= 5, decreasing for n = 3") {
  for (int n : {3, 5, 6, 10}) {
    const PotentialSystem sys = normalized_system(n);
    double prev = period(sys, 1e-8).period;
    bool increasing = true, decreasing = true;
    for (int i = 1; i < 100; ++i) {
      const double c = std::exp(std::log(1e-8) + (std::log(0.99 * sys.c_max()) - std::log(1e-8)) * i / 99.0);
      const double t = period(sys, c).period;
      increasing = increasing && t > prev;
      decreasing = decreasing && t < prev;
      prev = t;
    }
    CAPTURE(n);
    CHECK(increasing == (n != 3));
    CHECK(decreasing == (n == 3));
  }
}

TEST_CASE("finite-difference derivative agrees with the integral representation") {
  for (int n : {3, 5, 8}) {
    const PotentialSystem sys = normalized_system(n);
    for (double frac : {0.01, 0.1, 0.3, 0.6, 0.9}) {
      const double c = frac * sys.c_max();
      CAPTURE(n);
      CAPTURE(c);
      const double fd = period_derivative(sys, c);
      const double integral = period_derivative_integral(sys, c);
      CHECK(fd == doctest::Approx(integral).epsilon(1e-7));
      CHECK((n == 3 ? integral < 0 : integral > 0));
    }
  }
}

TEST_CASE("derivative at the cutoff uses a one-sided stencil") {
  const PotentialSystem sys = normalized_system(5);
  const PeriodOptions opts{1e-11, 1e-8, 0.99};
  const double c = 0.99 * sys.c_max();
  CHECK(period_derivative(sys, c, opts) == doctest::Approx(period_derivative_integral(sys, c, opts)).epsilon(1e-5));
}

TEST_CASE("energy range errors") {
  const PotentialSystem sys = normalized_system(5);
  CHECK_THROWS_AS(period(sys, 0.0), EnergyRangeError);
  CHECK_THROWS_AS(period(sys, -0.1), EnergyRangeError);
  CHECK_THROWS_AS(period(sys, 1.0 / 3.0), EnergyRangeError);
  CHECK_THROWS_AS(period(sys, 0.3, {1e-11, 1e-8, 0.5}), EnergyRangeError);
}

TEST_CASE("period table: ordering, failures per row and thread independence") {
  const PotentialSystem sys = normalized_system(6);
  const std::vector<double> energies{0.2, 0.01, 0.7, 0.1, 0.05};
  const PeriodTable one = period_table(sys, energies, {}, 1);
  const PeriodTable many = period_table(sys, energies, {}, 3);
  REQUIRE(one.rows.size() == 4);
  REQUIRE(one.errors.size() == 1);
  CHECK(one.errors[0].c == 0.7);
  CHECK(one.errors[0].reason == "energy-out-of-range");
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].c == many.rows[i].c);
    CHECK(one.rows[i].period == many.rows[i].period);
    CHECK(*one.rows[i].derivative == *many.rows[i].derivative);
    if (i) CHECK(one.rows[i].c > one.rows[i - 1].c);
  }
}

TEST_CASE("monotonicity certificate") {
  for (int n : {5, 6, 8, 10}) {
    const CertificateReport r = monotonicity_certificate(n);
    CAPTURE(n);
    CHECK(r.H_positive);
    CHECK(r.Delta_nonnegative);
    CHECK(r.H_min > 0.0);
    CHECK(r.grid.size() == r.H_values.size());
  }
  const CertificateReport four = monotonicity_certificate(4);
  for (double h : four.H_values) CHECK(std::abs(h) < 1e-12);
  // n = 3: H is negative, consistent with the decreasing period map.
  const CertificateReport three = monotonicity_certificate(3);
  CHECK_FALSE(three.H_positive);
  CHECK(three.H_min < 0.0);
}
