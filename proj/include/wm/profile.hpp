#pragma once

#include <cstddef>
#include <vector>

#include "wm/derdzinski.hpp"

namespace wm {

/// Warping function h sampled on a closed uniform grid t_0 = 0, ..., t_m = T,
/// with its first three derivatives and the exponent chain q = (4/n) ln h
/// (so e^q = h^{4/n}) with q', q'', q'''.
struct SolutionProfile {
  ModelParams params;
  double length = 0.0;
  std::vector<double> t, h, h1, h2, h3;
  std::vector<double> q, q1, q2, q3;

  std::size_t size() const noexcept { return t.size(); }
  /// Number of grid intervals (samples of one period without the endpoint).
  std::size_t intervals() const noexcept { return t.empty() ? 0 : t.size() - 1; }
  double spacing() const noexcept { return length / static_cast<double>(intervals()); }
};

/// Builds the q-chain from h and its derivatives and validates the result:
/// uniform grid starting at 0, h > 0, e^q = h^{4/n}, and t = 0 / t = T values
/// that agree to 1e-8 (relative to max |h|).
SolutionProfile make_profile(const ModelParams& params, std::vector<double> t, std::vector<double> h,
                             std::vector<double> h1, std::vector<double> h2, std::vector<double> h3);

/// Re-runs the invariant checks of make_profile.
void validate_profile(const SolutionProfile& p);

/// h = alpha on `intervals + 1` samples over [0, T].
SolutionProfile constant_profile(const ModelParams& params, double length, std::size_t intervals);

/// Derivatives recovered from h samples by fourth-order periodic differences.
SolutionProfile profile_from_samples(const ModelParams& params, std::vector<double> t,
                                     std::vector<double> h);

/// h -> h (1 + eps sin(2 pi t / T)), derivatives by the product rule.
SolutionProfile perturbed(const SolutionProfile& p, double eps);

}  // namespace wm
