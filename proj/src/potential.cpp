#include "wm/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wm/errors.hpp"
#include "wm/roots.hpp"

namespace wm {

PotentialSystem::PotentialSystem(std::string name, std::vector<PowerTerm> force_terms)
    : name_(std::move(name)), terms_(std::move(force_terms)) {
  if (terms_.empty()) throw ParameterError(name_ + ": force has no terms");
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coefficient) || !std::isfinite(t.exponent))
      throw ParameterError(name_ + ": non-finite force term");
    if (t.exponent <= -1.0)
      throw ParameterError(name_ + ": force exponent must exceed -1 so G(0+) is finite");
  }
  linear_ = std::all_of(terms_.begin(), terms_.end(), [](const PowerTerm& t) {
    return t.exponent == 0.0 || t.exponent == 1.0;
  });

  // The smallest exponent dominates as x -> 0+, the largest as x -> infinity.
  auto lowest = std::min_element(terms_.begin(), terms_.end(),
                                 [](auto& a, auto& b) { return a.exponent < b.exponent; });
  auto highest = std::max_element(terms_.begin(), terms_.end(),
                                  [](auto& a, auto& b) { return a.exponent < b.exponent; });
  if (!(lowest->coefficient < 0.0 && highest->coefficient > 0.0))
    throw ParameterError(name_ + ": force must be negative near 0 and positive at infinity");

  // Equilibrium in log-coordinates, expanding the bracket until it straddles.
  auto f = [this](double y) {
    double s = 0.0;
    for (const auto& t : terms_) s += t.coefficient * std::exp(t.exponent * y);
    return s;
  };
  double lo = -1.0, hi = 1.0;
  while (f(lo) >= 0.0) {
    lo *= 2.0;
    if (lo < -700.0) throw ParameterError(name_ + ": no equilibrium found");
  }
  while (f(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 700.0) throw ParameterError(name_ + ": no equilibrium found");
  }
  double y = solve_bracketed(f, lo, hi, 0.0, 1e-16);
  center_ = std::exp(y);
  for (int i = 0; i < 3; ++i) {
    double slope = force_slope(center_);
    if (slope == 0.0) break;
    double next = center_ - force(center_) / slope;
    if (!(next > 0.0)) break;
    center_ = next;
  }

  stiffness_ = force_slope(center_);
  if (!(stiffness_ > 0.0)) throw ParameterError(name_ + ": equilibrium is not a center");

  c_max_ = 0.0;
  for (const auto& t : terms_) {
    double p = t.exponent + 1.0;
    c_max_ -= t.coefficient / p * std::pow(center_, p);
  }
  if (!(c_max_ > 0.0) || !std::isfinite(c_max_))
    throw ParameterError(name_ + ": potential well has no positive depth");
}

void PotentialSystem::require_domain(double x) const {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << name_ << ": evaluation outside the open domain x > 0 (x = " << x << ")";
    throw PositivityError(os.str());
  }
}

double PotentialSystem::force(double x) const {
  require_domain(x);
  double s = 0.0;
  for (const auto& t : terms_) s += t.coefficient * std::pow(x, t.exponent);
  return s;
}

double PotentialSystem::force_slope(double x) const {
  require_domain(x);
  double s = 0.0;
  for (const auto& t : terms_)
    if (t.exponent != 0.0) s += t.coefficient * t.exponent * std::pow(x, t.exponent - 1.0);
  return s;
}

double PotentialSystem::force_curvature(double x) const {
  require_domain(x);
  double s = 0.0;
  for (const auto& t : terms_) {
    double e = t.exponent;
    if (e != 0.0 && e != 1.0) s += t.coefficient * e * (e - 1.0) * std::pow(x, e - 2.0);
  }
  return s;
}

double PotentialSystem::potential(double x) const {
  require_domain(x);
  double l = std::log(x / center_);
  double s = 0.0;
  for (const auto& t : terms_) {
    double p = t.exponent + 1.0;
    s += t.coefficient / p * std::pow(center_, p) * std::expm1(p * l);
  }
  return s;
}

double PotentialSystem::potential_rise(double x, double dx) const {
  require_domain(x);
  require_domain(x + dx);
  double l = std::log1p(dx / x);
  double s = 0.0;
  for (const auto& t : terms_) {
    double p = t.exponent + 1.0;
    s += t.coefficient / p * std::pow(x, p) * std::expm1(p * l);
  }
  return s;
}

double PotentialSystem::depth(double x) const {
  require_domain(x);
  double s = 0.0;
  for (const auto& t : terms_) {
    double p = t.exponent + 1.0;
    s -= t.coefficient / p * std::pow(x, p);
  }
  return s;
}

double PotentialSystem::linear_period() const noexcept {
  return 2.0 * std::numbers::pi / std::sqrt(stiffness_);
}

}  // namespace wm
