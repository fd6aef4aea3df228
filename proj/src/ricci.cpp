#include "wm/ricci.hpp"

#include <algorithm>
#include <cmath>

#include "wm/errors.hpp"
#include "wm/finite_difference.hpp"

namespace wm {
namespace {

double sup_abs(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace

RicciDerivativeFields ricci_derivatives(const SolutionProfile& p) {
  validate_profile(p);
  const double n = p.params.n;
  const double r0 = p.params.scalar_curvature / (n - 1.0);
  const std::size_t m = p.size();
  RicciDerivativeFields f;
  f.rho_000.resize(m);
  f.rho_0ij.resize(m);
  f.rho_i0j.resize(m);
  f.codazzi.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double q1 = p.q1[i], q2 = p.q2[i], q3 = p.q3[i], eq = std::exp(p.q[i]);
    f.rho_000[i] = -(n - 1.0) / 2.0 * (q3 + q1 * q2);
    f.rho_0ij[i] = -q1 * r0 - 0.5 * eq * (q3 + (n - 1.0) * q1 * q2);
    f.rho_i0j[i] = -0.5 * q1 * r0 - (n - 2.0) / 4.0 * eq * q1 * q2;
    f.codazzi[i] = f.rho_0ij[i] - f.rho_i0j[i];
  }
  f.sup_000 = sup_abs(f.rho_000);
  f.sup_0ij = sup_abs(f.rho_0ij);
  f.sup_i0j = sup_abs(f.rho_i0j);
  f.sup_codazzi = sup_abs(f.codazzi);
  return f;
}

double harmonic_residual(const SolutionProfile& p) { return ricci_derivatives(p).sup_codazzi; }

OdeResidual ode_residual(const SolutionProfile& p) {
  validate_profile(p);
  const double n = p.params.n;
  const double source = n * p.params.scalar_curvature / (4.0 * (n - 1.0));
  const double linear = n / 4.0 * p.params.constant;
  auto rhs = [&](double h) { return source * std::pow(h, 1.0 - 4.0 / n) - linear * h; };

  const std::size_t m = p.intervals();
  const std::vector<double> fd =
      periodic_second_difference(std::span<const double>(p.h.data(), m), p.spacing());
  OdeResidual r;
  for (std::size_t i = 0; i < p.size(); ++i) r.stored = std::max(r.stored, std::abs(p.h2[i] - rhs(p.h[i])));
  for (std::size_t i = 0; i < m; ++i) r.finite_difference = std::max(r.finite_difference, std::abs(fd[i] - rhs(p.h[i])));
  return r;
}

ParallelismVerdict parallelism_test(const SolutionProfile& p, double threshold) {
  const RicciDerivativeFields f = ricci_derivatives(p);
  ParallelismVerdict v;
  v.sup_norm = std::max({f.sup_000, f.sup_0ij, f.sup_i0j});
  v.verdict = v.sup_norm < threshold ? Parallelism::parallel : Parallelism::non_parallel;
  const double n = p.params.n;
  for (std::size_t i = 0; i < p.size(); ++i) {
    v.flow_condition = std::max(v.flow_condition, std::abs(p.q3[i] + p.q1[i] * p.q2[i]));
    v.scalar_condition = std::max(
        v.scalar_condition,
        std::abs((n - 1.0) * (n - 2.0) * p.q2[i] * std::exp(p.q[i]) + 2.0 * p.params.scalar_curvature));
  }
  return v;
}

double conformal_length(const SolutionProfile& p) {
  validate_profile(p);
  const double e = -2.0 / p.params.n;
  double s = 0.0;
  for (std::size_t i = 0; i < p.intervals(); ++i) s += std::pow(p.h[i], e);
  return s * p.spacing();
}

CodazziTensorFields codazzi_tensor_fields(std::span<const double> t, std::span<const double> psi,
                                          double trace, int n) {
  if (n < 3) throw ParameterError("dimension n must be >= 3");
  if (trace == 0.0 || !std::isfinite(trace)) throw ParameterError("Codazzi tensor trace must be nonzero");
  if (t.size() != psi.size() || t.size() < 5) throw ParameterError("psi needs at least 5 (t, psi) samples");
  const std::size_t m = t.size();
  const double dt = (t.back() - t.front()) / static_cast<double>(m - 1);
  if (!(dt > 0.0)) throw ParameterError("psi grid must be increasing");

  CodazziTensorFields out;
  out.lambda.resize(m);
  out.mu.resize(m);
  out.distinct = true;
  for (std::size_t i = 0; i < m; ++i) {
    const double decay = std::exp(-n * psi[i]);
    out.lambda[i] = trace / n + (1.0 - n) * trace * decay;
    out.mu[i] = trace / n + trace * decay;
    out.distinct = out.distinct && out.lambda[i] != out.mu[i];
    out.trace_defect = std::max(out.trace_defect, std::abs(out.lambda[i] + (n - 1.0) * out.mu[i] - trace));
  }
  const std::vector<double> dpsi = first_derivative(psi, dt);
  const std::vector<double> dmu = first_derivative(out.mu, dt);
  for (std::size_t i = 2; i + 2 < m; ++i)
    out.codazzi_defect =
        std::max(out.codazzi_defect, std::abs(dmu[i] - dpsi[i] * (out.lambda[i] - out.mu[i])));
  return out;
}

}  // namespace wm
