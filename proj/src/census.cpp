#include "wm/census.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wm/errors.hpp"
#include "wm/ricci.hpp"

namespace wm {

const char* to_string(FamilyKind k) { return k == FamilyKind::constant ? "constant" : "nonconstant"; }

const char* to_string(FamilyStatus s) {
  switch (s) {
    case FamilyStatus::verified: return "verified";
    case FamilyStatus::degenerate: return "degenerate";
    case FamilyStatus::isochronous: return "isochronous";
    case FamilyStatus::unattainable: return "unattainable";
    case FamilyStatus::closure_failed: return "closure_failed";
    case FamilyStatus::failed: return "failed";
  }
  return "unknown";
}

const char* to_string(PeriodTrend t) {
  switch (t) {
    case PeriodTrend::increasing: return "increasing";
    case PeriodTrend::decreasing: return "decreasing";
    case PeriodTrend::constant: return "constant";
    case PeriodTrend::non_monotone: return "non_monotone";
  }
  return "unknown";
}

int bracket_index(double length, double linear_period) {
  const double ratio = length / linear_period;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-12 * std::max(1.0, ratio)) return std::max(1, static_cast<int>(nearest));
  return std::max(1, static_cast<int>(std::ceil(ratio)));
}

SolvedProfile solve_profile(const ModelParams& params, double c, double length, std::size_t intervals,
                           const CensusOptions& opts) {
  if (c == 0.0) return {constant_profile(params, length, intervals), 0.0, 0.0};
  if (intervals < 8) throw ParameterError("profile needs at least 8 intervals");
  if (!(length > 0.0)) throw ParameterError("circle length must be positive");
  const DerivedParams d = derive_params(params);
  const PotentialSystem sys = normalized_system(params.n);
  const PeriodSample ps = period(sys, c, opts.period);
  const SampledOrbit orbit =
      sample_orbit(sys, ps.turning.b, 0.0, ps.period, d.beta * length, intervals, opts.sampling);

  const double n = params.n;
  const double source = n * params.scalar_curvature / (4.0 * (n - 1.0));
  const double linear = n / 4.0 * params.constant;
  const std::size_t m = intervals + 1;
  std::vector<double> t(m), h(m), h1(m), h2(m), h3(m);
  for (std::size_t i = 0; i < m; ++i) {
    t[i] = length * static_cast<double>(i) / static_cast<double>(intervals);
    h[i] = d.alpha * orbit.x[i];
    h1[i] = d.alpha * d.beta * orbit.v[i];
    h2[i] = source * std::pow(h[i], 1.0 - 4.0 / n) - linear * h[i];
    h3[i] = (1.0 - 4.0 / n) * source * std::pow(h[i], -4.0 / n) * h1[i] - linear * h1[i];
  }
  t.back() = length;
  return {make_profile(params, std::move(t), std::move(h), std::move(h1), std::move(h2), std::move(h3)),
          orbit.closure_distance, orbit.energy_drift};
}

SolutionProfile profile(const ModelParams& params, double c, double length, std::size_t intervals,
                        const CensusOptions& opts) {
  return solve_profile(params, c, length, intervals, opts).profile;
}

namespace detail {

MetricCensus run_census(const CensusEngine& engine, double length, const CensusOptions& opts) {
  if (!(length > 0.0) || !std::isfinite(length)) throw ParameterError("circle length T must be positive");
  const PotentialSystem& sys = engine.sys;
  const double scale = engine.time_scale;

  MetricCensus out;
  out.length = length;
  out.linear_period = sys.linear_period() / scale;
  out.bracket_k = bracket_index(length, out.linear_period);

  if (sys.is_linear()) {
    out.trend = PeriodTrend::constant;
    out.edge_period = out.linear_period;
  } else {
    out.edge_period = period(sys, opts.period.energy_cutoff * sys.c_max(), opts.period).period / scale;
    // Coarse scan of the period map before inverting it.
    std::vector<double> ts;
    const double top = opts.period.energy_cutoff * sys.c_max();
    const double lo = std::log(1e-6 * sys.c_max()), hi = std::log(top);
    for (int i = 0; i <= 16; ++i)
      ts.push_back(period(sys, std::min(top, std::exp(lo + (hi - lo) * i / 16.0)), opts.period).period);
    const bool up = std::is_sorted(ts.begin(), ts.end(), std::less_equal<>());
    const bool down = std::is_sorted(ts.begin(), ts.end(), std::greater_equal<>());
    out.trend = up ? PeriodTrend::increasing : down ? PeriodTrend::decreasing : PeriodTrend::non_monotone;
  }

  CensusFamily constant;
  constant.kind = FamilyKind::constant;
  constant.note = "constant solution";
  engine.verify(constant);
  out.families.push_back(constant);

  const double lower = std::min(out.linear_period, out.edge_period);
  for (int j = 1; length / j > lower * (1.0 - 1e-12); ++j) {
    CensusFamily fam;
    fam.kind = FamilyKind::nonconstant;
    fam.j = j;
    fam.minimal_period = length / j;
    const double offset = fam.minimal_period / out.linear_period - 1.0;

    if (sys.is_linear()) {
      if (std::abs(offset) <= 1e-9) {
        fam.status = FamilyStatus::isochronous;
        fam.energy = 0.5 * sys.c_max();
        fam.note = "every energy in (0, c_max) has this period; energy shown is representative";
      } else {
        fam.status = FamilyStatus::unattainable;
        fam.note = "the period map is constant";
      }
      out.families.push_back(fam);
      continue;
    }
    if (std::abs(offset) <= 1e-12) {
      fam.status = FamilyStatus::degenerate;
      fam.note = "T/j equals the linear period: zero-amplitude branch point";
      out.families.push_back(fam);
      continue;
    }

    try {
      fam.energy = energy_for_period(sys, fam.minimal_period * scale, opts.period);
      const PeriodSample ps = period(sys, fam.energy, opts.period);
      fam.minimal_period = ps.period / scale;
      fam.amplitude = (ps.turning.b - ps.turning.a) * engine.amplitude_scale;
      engine.verify(fam);
      fam.status = FamilyStatus::verified;
    } catch (const TargetUnattainableError& e) {
      fam.status = FamilyStatus::unattainable;
      fam.note = e.what();
    } catch (const ClosureError& e) {
      fam.status = FamilyStatus::closure_failed;
      fam.note = e.what();
    } catch (const Error& e) {
      fam.status = FamilyStatus::failed;
      fam.note = e.what();
    }
    out.families.push_back(fam);
  }

  out.count = 1;
  for (const auto& f : out.families)
    if (f.kind == FamilyKind::nonconstant &&
        (f.status == FamilyStatus::verified || f.status == FamilyStatus::isochronous))
      ++out.count;
  return out;
}

}  // namespace detail

MetricCensus census(const ModelParams& params, double length, const CensusOptions& opts) {
  params.validate();
  const DerivedParams d = derive_params(params);
  const PotentialSystem sys = normalized_system(params.n);

  detail::CensusEngine engine{sys, d.beta, d.alpha, [&](CensusFamily& fam) {
    const double c = fam.kind == FamilyKind::constant ? 0.0 : fam.energy;
    const SolvedProfile built = solve_profile(params, c, length, opts.samples, opts);
    fam.residuals.closure = built.closure;
    fam.residuals.energy_drift = built.drift;
    if (!(built.closure <= opts.closure_tol)) {
      std::ostringstream os;
      os << "re-integrated orbit misses closure by " << built.closure;
      throw ClosureError(os.str(), built.closure);
    }
    const SolutionProfile& p = built.profile;
    fam.residuals.codazzi = harmonic_residual(p);
    fam.residuals.ode_fd = ode_residual(p).finite_difference;
    const ParallelismVerdict pv = parallelism_test(p, opts.parallel_tol);
    fam.residuals.parallel = pv.verdict == Parallelism::parallel;
    fam.residuals.parallel_sup = pv.sup_norm;
    fam.residuals.conformal_length = conformal_length(p);
  }};

  MetricCensus out = detail::run_census(engine, length, opts);
  out.system = "derdzinski";
  out.n = params.n;
  out.params = params;
  return out;
}

}  // namespace wm
