#include "wm/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wm/errors.hpp"
#include "wm/finite_difference.hpp"

namespace wm {

void validate_profile(const SolutionProfile& p) {
  p.params.validate();
  const std::size_t m = p.t.size();
  if (m < 8) throw ParameterError("profile needs at least 8 samples");
  for (const auto* v : {&p.h, &p.h1, &p.h2, &p.h3, &p.q, &p.q1, &p.q2, &p.q3})
    if (v->size() != m) throw ParameterError("profile columns have mismatched lengths");
  if (p.t.front() != 0.0 || !(p.length > 0.0))
    throw ParameterError("profile grid must start at t = 0 and have positive length");
  const double dt = p.spacing();
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(p.t[i] - dt * static_cast<double>(i)) > 1e-9 * p.length)
      throw ParameterError("profile grid is not uniform");
    if (!(p.h[i] > 0.0) || !std::isfinite(p.h[i])) {
      std::ostringstream os;
      os << "profile is not positive at t = " << p.t[i] << " (h = " << p.h[i] << ")";
      throw PositivityError(os.str());
    }
    const double ref = std::pow(p.h[i], 4.0 / p.params.n);
    if (std::abs(std::exp(p.q[i]) - ref) > 1e-12 * ref)
      throw ParameterError("exponent chain inconsistent with h");
  }
  const double scale = std::max(1.0, *std::max_element(p.h.begin(), p.h.end()));
  if (std::abs(p.h.back() - p.h.front()) > 1e-8 * scale ||
      std::abs(p.h1.back() - p.h1.front()) > 1e-8 * scale) {
    std::ostringstream os;
    os << "profile is not periodic: h(T) - h(0) = " << p.h.back() - p.h.front();
    throw ParameterError(os.str());
  }
}

SolutionProfile make_profile(const ModelParams& params, std::vector<double> t, std::vector<double> h,
                             std::vector<double> h1, std::vector<double> h2, std::vector<double> h3) {
  SolutionProfile p;
  p.params = params;
  p.length = t.empty() ? 0.0 : t.back();
  const std::size_t m = t.size();
  p.t = std::move(t);
  p.h = std::move(h);
  p.h1 = std::move(h1);
  p.h2 = std::move(h2);
  p.h3 = std::move(h3);
  if (p.h.size() != m || p.h1.size() != m || p.h2.size() != m || p.h3.size() != m)
    throw ParameterError("profile columns have mismatched lengths");

  const double k = 4.0 / params.n;
  p.q.resize(m);
  p.q1.resize(m);
  p.q2.resize(m);
  p.q3.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double r1 = p.h1[i] / p.h[i], r2 = p.h2[i] / p.h[i], r3 = p.h3[i] / p.h[i];
    p.q[i] = k * std::log(p.h[i]);
    p.q1[i] = k * r1;
    p.q2[i] = k * (r2 - r1 * r1);
    p.q3[i] = k * (r3 - 3.0 * r1 * r2 + 2.0 * r1 * r1 * r1);
  }
  validate_profile(p);
  return p;
}

SolutionProfile constant_profile(const ModelParams& params, double length, std::size_t intervals) {
  const double alpha = derive_params(params).alpha;
  const std::size_t m = intervals + 1;
  std::vector<double> t(m);
  for (std::size_t i = 0; i < m; ++i) t[i] = length * static_cast<double>(i) / static_cast<double>(intervals);
  t.back() = length;
  return make_profile(params, std::move(t), std::vector<double>(m, alpha), std::vector<double>(m, 0.0),
                      std::vector<double>(m, 0.0), std::vector<double>(m, 0.0));
}

SolutionProfile profile_from_samples(const ModelParams& params, std::vector<double> t,
                                     std::vector<double> h) {
  if (t.size() != h.size() || t.size() < 8) throw ParameterError("profile needs at least 8 (t, h) samples");
  const std::size_t m = t.size() - 1;
  const double dt = (t.back() - t.front()) / static_cast<double>(m);
  const PeriodicDerivatives d = periodic_derivatives(std::span<const double>(h.data(), m), dt);
  std::vector<double> h1(d.d1), h2(d.d2), h3(d.d3);
  h1.push_back(h1.front());
  h2.push_back(h2.front());
  h3.push_back(h3.front());
  return make_profile(params, std::move(t), std::move(h), std::move(h1), std::move(h2), std::move(h3));
}

SolutionProfile perturbed(const SolutionProfile& p, double eps) {
  const std::size_t m = p.size();
  const double w = 2.0 * std::numbers::pi / p.length;
  std::vector<double> h(m), h1(m), h2(m), h3(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double s = std::sin(w * p.t[i]), c = std::cos(w * p.t[i]);
    // g = 1 + eps sin(wt) and its derivatives.
    const double g0 = 1.0 + eps * s, g1 = eps * w * c, g2 = -eps * w * w * s, g3 = -eps * w * w * w * c;
    h[i] = p.h[i] * g0;
    h1[i] = p.h1[i] * g0 + p.h[i] * g1;
    h2[i] = p.h2[i] * g0 + 2.0 * p.h1[i] * g1 + p.h[i] * g2;
    h3[i] = p.h3[i] * g0 + 3.0 * p.h2[i] * g1 + 3.0 * p.h1[i] * g2 + p.h[i] * g3;
  }
  return make_profile(p.params, p.t, std::move(h), std::move(h1), std::move(h2), std::move(h3));
}

}  // namespace wm
