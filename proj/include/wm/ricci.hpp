#pragma once

#include <span>
#include <vector>

#include "wm/profile.hpp"

namespace wm {

/// Covariant derivative of the Ricci tensor of dt^2 + e^q g0 along a profile,
/// with the fiber Einstein (r0 = R/(n-1) g0). In the product chart every
/// nonzero component is a function of t times g0_ij (or a pure function of t
/// for the 000 slot); the mixed components nabla_0 r_i0 and nabla_i r_00
/// vanish identically and are not stored.
///
///   nabla_0 r_00 = -(n-1)/2 (q''' + q' q'')
///   nabla_0 r_ij = [-q' R/(n-1) - e^q/2 (q''' + (n-1) q' q'')] g0_ij
///   nabla_i r_0j = [-q' R/(2(n-1)) - (n-2)/4 e^q q' q''] g0_ij
struct RicciDerivativeFields {
  std::vector<double> rho_000;
  std::vector<double> rho_0ij;
  std::vector<double> rho_i0j;
  /// rho_0ij - rho_i0j, the only nontrivial Codazzi defect of r.
  std::vector<double> codazzi;
  double sup_000 = 0.0;
  double sup_0ij = 0.0;
  double sup_i0j = 0.0;
  double sup_codazzi = 0.0;
};

RicciDerivativeFields ricci_derivatives(const SolutionProfile& p);

/// sup_t |nabla_0 r_ij - nabla_i r_0j|; zero exactly when r is a Codazzi
/// tensor, i.e. when the metric has harmonic curvature.
double harmonic_residual(const SolutionProfile& p);

struct OdeResidual {
  /// Uses the stored h''.
  double stored = 0.0;
  /// Recomputes h'' from the h samples by periodic second differences.
  double finite_difference = 0.0;
};

/// sup_t |h'' - nR/(4(n-1)) h^{1-4/n} + (n/4) C h|.
OdeResidual ode_residual(const SolutionProfile& p);

enum class Parallelism { parallel, non_parallel };

struct ParallelismVerdict {
  Parallelism verdict = Parallelism::parallel;
  /// Max of the three component sup-norms.
  double sup_norm = 0.0;
  /// sup |q''' + q' q''| and sup |(n-1)(n-2) q'' e^q + 2R|: the two-condition
  /// characterization, reported for comparison only (the second cannot vanish
  /// for constant q, although constant q gives a parallel Ricci tensor).
  double flow_condition = 0.0;
  double scalar_condition = 0.0;
};

ParallelismVerdict parallelism_test(const SolutionProfile& p, double threshold = 1e-10);

/// int_0^T h^{-2/n} dt by the periodic trapezoid rule (spectrally accurate for
/// smooth periodic h).
double conformal_length(const SolutionProfile& p);

/// Eigenvalue fields of b = lambda dt^2 + mu e^{2 psi} g_N with constant trace c:
///   lambda = c/n + (1-n) c e^{-n psi},  mu = c/n + c e^{-n psi}.
struct CodazziTensorFields {
  std::vector<double> lambda;
  std::vector<double> mu;
  bool distinct = false;
  /// sup |lambda + (n-1) mu - c|.
  double trace_defect = 0.0;
  /// sup |mu' - psi' (lambda - mu)|, the Codazzi equation for this b,
  /// evaluated with fourth-order differences.
  double codazzi_defect = 0.0;
};

CodazziTensorFields codazzi_tensor_fields(std::span<const double> t, std::span<const double> psi,
                                          double trace, int n);

}  // namespace wm
