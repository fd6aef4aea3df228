#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wm/census.hpp"
#include "wm/errors.hpp"
#include "wm/ricci.hpp"

using namespace wm;
using std::numbers::pi;

namespace {

const CensusFamily* family(const MetricCensus& m, int j) {
  for (const auto& f : m.families)
    if (f.kind == FamilyKind::nonconstant && f.j == j) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("bracket index") {
  CHECK(bracket_index(1.0, 2 * pi) == 1);
  CHECK(bracket_index(2 * pi, 2 * pi) == 1);
  CHECK(bracket_index(7.0, 2 * pi) == 2);
  CHECK(bracket_index(4 * pi, 2 * pi) == 2);
  CHECK(bracket_index(13.0, 2 * pi) == 3);
}

TEST_CASE("census at n = 5, R = 16, C = 1, T = 7: constant plus one family") {
  const ModelParams p{5, 16.0, 1.0};
  const MetricCensus m = census(p, 7.0);
  CHECK(m.count == 2);
  CHECK(m.bracket_k == 2);
  CHECK(m.trend == PeriodTrend::increasing);
  CHECK(m.linear_period == doctest::Approx(2 * pi).epsilon(1e-15));
  REQUIRE(m.families.size() == 2);
  CHECK(m.families[0].kind == FamilyKind::constant);
  const CensusFamily& f = m.families[1];
  CHECK(f.j == 1);
  CHECK(f.status == FamilyStatus::verified);
  CHECK(std::abs(f.j * f.minimal_period - 7.0) < 1e-8);
  CHECK(f.residuals.closure < 1e-8);
  CHECK(f.residuals.codazzi < 1e-8);
  CHECK_FALSE(f.residuals.parallel);
  CHECK(m.families[0].residuals.parallel);
  const DerivedParams d = derive_params(p);
  const TurningPoints tp = turning_points(normalized_system(5), f.energy);
  CHECK(f.amplitude == doctest::Approx(d.alpha * (tp.b - tp.a)).epsilon(1e-14));
}

TEST_CASE("below the first bifurcation only the constant solution exists") {
  const MetricCensus m = census({5, 16.0, 1.0}, 6.0);
  CHECK(m.count == 1);
  CHECK(m.bracket_k == 1);
  CHECK(m.families.size() == 1);
}

TEST_CASE("the bounded period map limits the count") {
  // The n = 5 period never exceeds 5 pi / (2 beta) ~ 7.02, so T = 14 admits
  // only the doubly covered family.
  const MetricCensus m = census({5, 16.0, 1.0}, 14.0);
  CHECK(m.bracket_k == 3);
  CHECK(m.count == 2);
  CHECK(family(m, 1)->status == FamilyStatus::unattainable);
  CHECK(family(m, 2)->status == FamilyStatus::verified);
  CHECK(std::abs(2 * family(m, 2)->minimal_period - 14.0) < 1e-8);
  CHECK(m.edge_period < 5 * pi / (2 * derive_params({5, 16.0, 1.0}).beta));
}

TEST_CASE("a length on a bifurcation value yields a degenerate marker") {
  const MetricCensus m = census({5, 16.0, 1.0}, 4 * pi);
  REQUIRE(family(m, 2) != nullptr);
  CHECK(family(m, 2)->status == FamilyStatus::degenerate);
  CHECK(family(m, 2)->amplitude == 0.0);
  CHECK(m.count == 1);
}

TEST_CASE("n = 3: decreasing period map, families below the linear period") {
  const MetricCensus m = census({3, 2.0, 1.0}, 12.0);
  CHECK(m.trend == PeriodTrend::decreasing);
  CHECK(m.count == 2);
  CHECK(family(m, 1)->status == FamilyStatus::unattainable);
  const CensusFamily* f = family(m, 2);
  REQUIRE(f != nullptr);
  CHECK(f->status == FamilyStatus::verified);
  CHECK(f->minimal_period < m.linear_period);
  CHECK(f->residuals.codazzi < 1e-8);
}

TEST_CASE("n = 4: the isochronous case counts resonant lengths") {
  const MetricCensus resonant = census({4, 12.0, 1.0}, 4 * pi);
  CHECK(resonant.trend == PeriodTrend::constant);
  CHECK(resonant.count == 2);
  CHECK(family(resonant, 2)->status == FamilyStatus::isochronous);
  CHECK(family(resonant, 1)->status == FamilyStatus::unattainable);
  CHECK(census({4, 12.0, 1.0}, 13.0).count == 1);
}

TEST_CASE("profile phase, periodicity and constant case") {
  const ModelParams p{6, 30.0, 4.0};
  const double c = energy_for_period(normalized_system(6), derive_params(p).beta * 3.5);
  const SolutionProfile prof = profile(p, c, 7.0, 1024);
  CHECK(prof.size() == 1025);
  CHECK(prof.t.back() == 7.0);
  for (double h : prof.h) CHECK(h <= prof.h.front() * (1 + 1e-12));
  CHECK(std::abs(prof.h[512] - prof.h[0]) < 1e-9);  // two minimal periods on the grid
  CHECK(prof.h1.front() == 0.0);

  const SolutionProfile flat = profile(p, 0.0, 7.0, 64);
  for (double h : flat.h) CHECK(h == derive_params(p).alpha);
  CHECK_THROWS_AS(profile(p, 0.5, 7.0, 64), EnergyRangeError);
}

TEST_CASE("harmonic residual vanishes exactly when the finite-difference ODE residual does") {
  struct Case {
    ModelParams p;
    double T;
  };
  const Case cases[] = {{{5, 16.0, 1.0}, 6.6}, {{5, 16.0, 1.0}, 13.5}, {{6, 30.0, 4.0}, 10.0},
                        {{3, 2.0, 1.0}, 12.0}, {{8, 3.0, 0.5}, 25.0}};
  CensusOptions opts;
  opts.samples = 32768;
  int checked = 0;
  for (const auto& cs : cases) {
    const MetricCensus m = census(cs.p, cs.T, opts);
    for (const auto& f : m.families) {
      if (f.status != FamilyStatus::verified) continue;
      CAPTURE(cs.p.n);
      CAPTURE(cs.T);
      CAPTURE(f.j);
      CHECK(f.residuals.codazzi < 1e-8);
      CHECK(f.residuals.ode_fd < 1e-5);
      const SolutionProfile prof = profile(cs.p, f.energy, cs.T, opts.samples, opts);
      const SolutionProfile bent = perturbed(prof, 1e-3);
      CHECK(harmonic_residual(bent) >= 1e-8);
      CHECK(ode_residual(bent).finite_difference >= 1e-5);
      ++checked;
    }
  }
  CHECK(checked >= 8);
}

TEST_CASE("census input validation") {
  CHECK_THROWS_AS(census({5, 16.0, 1.0}, 0.0), ParameterError);
  CHECK_THROWS_AS(census({5, 16.0, 1.0}, -3.0), ParameterError);
  CHECK_THROWS_AS(census({2, 16.0, 1.0}, 7.0), ParameterError);
}

TEST_CASE("closure failures are flagged, not counted") {
  CensusOptions opts;
  opts.closure_tol = 1e-30;
  const MetricCensus m = census({5, 16.0, 1.0}, 7.0, opts);
  CHECK(family(m, 1)->status == FamilyStatus::closure_failed);
  CHECK(m.count == 1);
}
