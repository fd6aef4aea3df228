#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wm/derdzinski.hpp"
#include "wm/orbit.hpp"
#include "wm/period_map.hpp"
#include "wm/profile.hpp"

namespace wm {

enum class FamilyKind { constant, nonconstant };

enum class FamilyStatus {
  verified,        // solved and passed closure verification
  degenerate,      // T/j sits on a bifurcation value: zero amplitude, not counted
  isochronous,     // linear period map resonant with T/j: a continuum of energies
  unattainable,    // T/j outside the range of the period map
  closure_failed,  // solved, but the re-integrated orbit does not close
  failed,          // other numerical failure
};

const char* to_string(FamilyKind k);
const char* to_string(FamilyStatus s);

struct FamilyResiduals {
  double closure = 0.0;
  double energy_drift = 0.0;
  /// Harmonic-curvature (Codazzi) residual; Derdzinski families only.
  double codazzi = 0.0;
  /// ODE residual with h'' (or u'') from periodic second differences.
  double ode_fd = 0.0;
  double parallel_sup = 0.0;
  bool parallel = true;
  double conformal_length = 0.0;
};

/// One translation class of T-periodic solutions.
struct CensusFamily {
  FamilyKind kind = FamilyKind::constant;
  int j = 0;  // the solution has minimal period T/j; 0 for the constant family
  FamilyStatus status = FamilyStatus::verified;
  /// Energy in the system's own normalization (0 for the constant family).
  double energy = 0.0;
  double minimal_period = 0.0;
  /// max - min of the solution in physical units.
  double amplitude = 0.0;
  FamilyResiduals residuals;
  std::string note;
};

enum class PeriodTrend { increasing, decreasing, constant, non_monotone };
const char* to_string(PeriodTrend t);

struct MetricCensus {
  std::string system;
  int n = 0;
  std::optional<ModelParams> params;
  double length = 0.0;
  /// Small-amplitude minimal period in physical time (2 pi / sqrt(C) or 2 pi / sqrt(n-2)).
  double linear_period = 0.0;
  /// Physical period at the energy cutoff.
  double edge_period = 0.0;
  PeriodTrend trend = PeriodTrend::increasing;
  std::vector<CensusFamily> families;
  /// 1 + number of verified or isochronous nonconstant families.
  int count = 0;
  /// k with 2 pi (k-1) < T / linear_period * 2 pi <= 2 pi k.
  int bracket_k = 0;
};

struct CensusOptions {
  PeriodOptions period;
  std::size_t samples = 4096;
  double closure_tol = 1e-8;
  double parallel_tol = 1e-10;
  SamplingOptions sampling;
};

/// Uniformly sampled T-periodic solution h = alpha f(beta t) with the phase
/// fixed so that h is maximal at t = 0; h'' and h''' come from the ODE.
/// c is the normalized energy; c = 0 yields the constant solution.
SolutionProfile profile(const ModelParams& params, double c, double length, std::size_t intervals,
                        const CensusOptions& opts = {});

/// profile() together with the closure distance and energy drift of the
/// integration (normalized units).
struct SolvedProfile {
  SolutionProfile profile;
  double closure = 0.0;
  double drift = 0.0;
};
SolvedProfile solve_profile(const ModelParams& params, double c, double length, std::size_t intervals,
                            const CensusOptions& opts = {});

MetricCensus census(const ModelParams& params, double length, const CensusOptions& opts = {});

/// The k with (k-1) L < T <= k L, L the linear period.
int bracket_index(double length, double linear_period);

namespace detail {

/// Counting engine shared by the Derdzinski and Yamabe censuses. `sys` is in
/// its own time variable; physical time is system time / time_scale.
/// `verify` fills residuals for a solved family (throwing on failure).
struct CensusEngine {
  const PotentialSystem& sys;
  double time_scale = 1.0;
  double amplitude_scale = 1.0;
  std::function<void(CensusFamily&)> verify;
};

MetricCensus run_census(const CensusEngine& engine, double length, const CensusOptions& opts);

}  // namespace detail

}  // namespace wm
