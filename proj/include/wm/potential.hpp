#pragma once

#include <span>
#include <string>
#include <vector>

namespace wm {

/// One term k * x^e of a restoring force.
struct PowerTerm {
  double coefficient;
  double exponent;
};

/// Planar conservative system x'' + phi(x) = 0 on x > 0 whose restoring force
/// is a finite sum of power laws. Every system in this project (normalized and
/// physical Derdzinski, pseudo-cylindric Yamabe) has this form.
///
/// The potential G is normalized so that G(center) = 0; an orbit of energy c
/// then turns around where G = c. The left boundary x = 0 is open: all power
/// exponents of G are positive, so G(0+) is finite and is the supremum c_max of
/// energies whose orbits stay inside the domain.
///
/// Differences of G are formed term by term with expm1/log1p so that the gap
/// c - G(u) near a turning point keeps its relative accuracy.
class PotentialSystem {
 public:
  PotentialSystem(std::string name, std::vector<PowerTerm> force_terms);

  const std::string& name() const noexcept { return name_; }
  std::span<const PowerTerm> terms() const noexcept { return terms_; }

  double force(double x) const;
  double force_slope(double x) const;
  double force_curvature(double x) const;

  /// G(x), zero at the center.
  double potential(double x) const;
  /// G(x + dx) - G(x) without cancellation against G's offset.
  double potential_rise(double x, double dx) const;
  /// c_max - G(x); accurate for x close to the left boundary.
  double depth(double x) const;

  double center() const noexcept { return center_; }
  double c_max() const noexcept { return c_max_; }
  double domain_low() const noexcept { return 0.0; }
  /// phi'(center) > 0.
  double stiffness() const noexcept { return stiffness_; }
  /// Small-amplitude period 2*pi/sqrt(phi'(center)).
  double linear_period() const noexcept;
  /// True when phi is affine, in which case every orbit has the same period.
  bool is_linear() const noexcept { return linear_; }

 private:
  void require_domain(double x) const;

  std::string name_;
  std::vector<PowerTerm> terms_;
  double center_ = 0.0;
  double c_max_ = 0.0;
  double stiffness_ = 0.0;
  bool linear_ = false;
};

}  // namespace wm
