#include "wm/yamabe.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wm/errors.hpp"
#include "wm/finite_difference.hpp"

namespace wm {

namespace {

void check_dimension(int n) {
  if (n < 3) throw ParameterError("dimension n must be at least 3");
}

double critical_exponent(int n) { return (n + 2.0) / (n - 2.0); }

}  // namespace

YamabeSystem yamabe_system(int n) {
  check_dimension(n);
  const double m = n;
  PotentialSystem sys("yamabe", {{-(m - 2.0) * (m - 2.0) / 4.0, 1.0}, {m * (m - 2.0) / 4.0, critical_exponent(n)}});
  YamabeSystem out{n, sys, std::pow((m - 2.0) / m, (m - 2.0) / 4.0)};
  return out;
}

double yamabe_threshold(int n) {
  check_dimension(n);
  return 2.0 * std::numbers::pi / std::sqrt(n - 2.0);
}

YamabeProfile yamabe_profile(int n, double c, double length, std::size_t intervals, const CensusOptions& opts) {
  const YamabeSystem ys = yamabe_system(n);
  if (intervals < 8) throw ParameterError("profile needs at least 8 intervals");
  if (!(length > 0.0)) throw ParameterError("circle length must be positive");
  YamabeProfile out;
  out.t.resize(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i)
    out.t[i] = length * static_cast<double>(i) / static_cast<double>(intervals);
  out.t.back() = length;
  if (c == 0.0) {
    out.u.assign(intervals + 1, ys.constant_solution);
    out.u1.assign(intervals + 1, 0.0);
    return out;
  }
  const PeriodSample ps = period(ys.system, c, opts.period);
  SampledOrbit orbit = sample_orbit(ys.system, ps.turning.b, 0.0, ps.period, length, intervals, opts.sampling);
  out.u = std::move(orbit.x);
  out.u1 = std::move(orbit.v);
  return out;
}

double yamabe_residual(std::span<const double> t, std::span<const double> u, int n) {
  check_dimension(n);
  if (t.size() != u.size() || t.size() < 4) throw ParameterError("yamabe residual needs matching t and u with at least 4 samples");
  const std::size_t m = t.size() - 1;
  const double dt = (t.back() - t.front()) / static_cast<double>(m);
  if (!(dt > 0.0)) throw ParameterError("time grid must be increasing");
  for (double x : u)
    if (!(x > 0.0)) throw PositivityError("u must stay positive");
  const std::vector<double> d2 = periodic_second_difference(u.first(m), dt);
  const double a = (n - 2.0) * (n - 2.0) / 4.0, b = n * (n - 2.0) / 4.0, p = critical_exponent(n);
  double sup = 0.0;
  for (std::size_t i = 0; i < m; ++i) sup = std::max(sup, std::abs(d2[i] - a * u[i] + b * std::pow(u[i], p)));
  return sup;
}

MetricCensus yamabe_census(int n, double length, const CensusOptions& opts) {
  const YamabeSystem ys = yamabe_system(n);
  detail::CensusEngine engine{ys.system, 1.0, 1.0, [&](CensusFamily& fam) {
    const double c = fam.kind == FamilyKind::constant ? 0.0 : fam.energy;
    double closure = 0.0, drift = 0.0;
    YamabeProfile prof;
    if (c == 0.0) {
      prof = yamabe_profile(n, 0.0, length, opts.samples, opts);
    } else {
      const PeriodSample ps = period(ys.system, c, opts.period);
      SampledOrbit orbit =
          sample_orbit(ys.system, ps.turning.b, 0.0, ps.period, length, opts.samples, opts.sampling);
      closure = orbit.closure_distance;
      drift = orbit.energy_drift;
      prof.t.resize(orbit.tau.size());
      for (std::size_t i = 0; i < prof.t.size(); ++i)
        prof.t[i] = length * static_cast<double>(i) / static_cast<double>(opts.samples);
      prof.u = std::move(orbit.x);
    }
    fam.residuals.closure = closure;
    fam.residuals.energy_drift = drift;
    if (!(closure <= opts.closure_tol)) {
      std::ostringstream os;
      os << "re-integrated orbit misses closure by " << closure;
      throw ClosureError(os.str(), closure);
    }
    fam.residuals.ode_fd = yamabe_residual(prof.t, prof.u, n);
  }};
  MetricCensus out = detail::run_census(engine, length, opts);
  out.system = "yamabe";
  out.n = n;
  return out;
}

}  // namespace wm
