#pragma once

#include "wm/potential.hpp"

namespace wm {

/// Geometric inputs of the warped product dt^2 + h^{4/n}(t) g0 on S^1(T) x N,
/// where N is an (n-1)-dimensional Einstein manifold of scalar curvature R and
/// h solves
///
///   h'' - n R / (4(n-1)) h^{1-4/n} = -(n/4) C h.
struct ModelParams {
  int n = 0;
  double scalar_curvature = 0.0;  // R
  double constant = 0.0;          // C

  void validate() const;
};

/// Constants attached to a parameter set.
struct DerivedParams {
  /// Constant solution h = alpha, solved from the equilibrium identity.
  double alpha = 0.0;
  /// Time scale sqrt(nC/4) of the substitution h(t) = alpha f(beta t).
  double beta = 0.0;
  /// Critical energy 1/(n-2) of the normalized system.
  double c0 = 0.0;
  /// Small-amplitude minimal period 2*pi/sqrt(C) in physical time.
  double min_period = 0.0;
};

void validate_dimension(int n);

DerivedParams derive_params(const ModelParams& params);

/// f'' + (f - f^{1-4/n}) = 0, center 1, c_max = 1/(n-2).
PotentialSystem normalized_system(int n);

/// h'' + ((n/4) C h - n R/(4(n-1)) h^{1-4/n}) = 0, center alpha.
PotentialSystem raw_system(const ModelParams& params);

/// Energy of the physical orbit h = alpha f(beta t) for a normalized energy c.
double raw_energy(const DerivedParams& d, double normalized_energy);

/// The two closed forms printed for the constant solution; neither solves the
/// equilibrium identity in general. Reported for comparison only.
struct PrintedConstantForms {
  double introduction;  // (R / (4(n-1)C))^{4/n}
  double bifurcation;   // ((n-1)C / (nR))^{-n/4}
};
PrintedConstantForms printed_constant_forms(const ModelParams& params);

}  // namespace wm
