#include "wm/period_map.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "wm/derdzinski.hpp"
#include "wm/errors.hpp"
#include "wm/quadrature.hpp"
#include "wm/roots.hpp"

namespace wm {
namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

// int_a^b w(u) du / sqrt(c - G(u)) through u = a + (b - a) sin^2(theta).
// The gap c - G(u) is measured from whichever turning point is closer so it
// never loses relative accuracy near an endpoint.
template <class Weight>
Integral turning_integral(const PotentialSystem& sys, const TurningPoints& tp, Weight&& weight,
                          double rel_tol) {
  const double a = tp.a, b = tp.b, len = b - a;

  auto integrand = [&](double th) {
    const double s = std::sin(th), co = std::cos(th);
    double u, gap;
    bool left = th <= kQuarterPi;
    if (left) {
      const double off = len * s * s;
      u = a + off;
      gap = -sys.potential_rise(a, off);
    } else {
      const double off = len * co * co;
      u = b - off;
      gap = -sys.potential_rise(b, -off);
    }
    if (!(gap > 0.0)) {
      // Endpoint limit of the substituted integrand.
      const double x = left ? a : b;
      return weight(x) * 2.0 * std::sqrt(len / std::abs(sys.force(x)));
    }
    return weight(u) * len * 2.0 * s * co / std::sqrt(gap);
  };

  std::vector<double> breaks{0.0};
  const double ratio = a / len;
  if (ratio < 0.05) {
    const double layer = std::asin(std::sqrt(ratio));
    for (double t = layer / 8.0; t < 0.75 * kQuarterPi; t *= 2.0) breaks.push_back(t);
  }
  breaks.push_back(kQuarterPi);
  breaks.push_back(2.0 * kQuarterPi);

  double prev = gauss_panels(integrand, breaks, gauss_legendre(8));
  double err = std::abs(prev);
  for (std::size_t order = 16; order <= 1024; order *= 2) {
    const double cur = gauss_panels(integrand, breaks, gauss_legendre(order));
    err = std::abs(cur - prev);
    prev = cur;
    if (err <= rel_tol * std::abs(cur)) break;
  }
  return {prev, err};
}

}  // namespace

void require_admissible_energy(const PotentialSystem& sys, double c, const PeriodOptions& opts) {
  if (!(c > 0.0) || !(c < sys.c_max())) {
    std::ostringstream os;
    os << sys.name() << ": energy " << c << " outside (0, " << sys.c_max() << ")";
    throw EnergyRangeError(os.str());
  }
  if (c > opts.energy_cutoff * sys.c_max()) {
    std::ostringstream os;
    os << sys.name() << ": energy " << c << " above the near-critical cutoff "
       << opts.energy_cutoff << " * c_max";
    throw EnergyRangeError(os.str());
  }
}

TurningPoints turning_points(const PotentialSystem& sys, double c, const PeriodOptions& opts) {
  require_admissible_energy(sys, c, opts);
  const double x0 = sys.center();

  double hi = 2.0 * x0;
  while (sys.potential(hi) <= c) {
    hi *= 2.0;
    if (hi > 1e300) throw BracketError(sys.name() + ": no right turning point");
  }
  const double b = solve_bracketed([&](double x) { return sys.potential(x) - c; }, x0, hi, 1e-15);

  // Left root in log coordinates; close to the critical energy the deficit
  // c_max - c is matched against depth() instead of G against c.
  const double y0 = std::log(x0);
  double ylo = y0 - 1.0;
  double a;
  if (c <= 0.5 * sys.c_max()) {
    auto f = [&](double y) { return sys.potential(std::exp(y)) - c; };
    while (f(ylo) <= 0.0) {
      ylo = y0 + 2.0 * (ylo - y0);
      if (ylo < -700.0) throw BracketError(sys.name() + ": no left turning point");
    }
    a = std::exp(solve_bracketed(f, ylo, y0, 0.0, 1e-16));
  } else {
    const double deficit = sys.c_max() - c;
    auto f = [&](double y) { return sys.depth(std::exp(y)) - deficit; };
    while (f(ylo) >= 0.0) {
      ylo = y0 + 2.0 * (ylo - y0);
      if (ylo < -700.0) throw BracketError(sys.name() + ": no left turning point");
    }
    a = std::exp(solve_bracketed(f, ylo, y0, 0.0, 1e-16));
  }
  return {a, b, c};
}

PeriodSample period(const PotentialSystem& sys, double c, const PeriodOptions& opts) {
  PeriodSample s;
  s.c = c;
  s.turning = turning_points(sys, c, opts);
  const Integral in = turning_integral(sys, s.turning, [](double) { return 1.0; }, opts.rel_tol);
  s.period = std::numbers::sqrt2 * in.value;
  s.error_estimate = std::numbers::sqrt2 * in.error;
  if (!std::isfinite(s.period) || s.error_estimate > opts.max_error * s.period) {
    std::ostringstream os;
    os << sys.name() << ": period quadrature at c = " << c << " reached only "
       << s.error_estimate / s.period << " relative accuracy";
    throw AccuracyError(os.str(), s.error_estimate);
  }
  return s;
}

double period_derivative(const PotentialSystem& sys, double c, const PeriodOptions& opts) {
  require_admissible_energy(sys, c, opts);
  const double room = opts.energy_cutoff * sys.c_max() - c;
  const double h = 0.02 * std::min({c, 0.05 * sys.c_max(), sys.c_max() - c});
  auto T = [&](double e) { return period(sys, e, opts).period; };
  if (room >= h) {
    auto central = [&](double step) { return (T(c + step) - T(c - step)) / (2.0 * step); };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
  }
  // Too close to the cutoff for a centered stencil: one-sided second order.
  const double t0 = T(c);
  auto backward = [&](double step) { return (3.0 * t0 - 4.0 * T(c - step) + T(c - 2.0 * step)) / (2.0 * step); };
  return (4.0 * backward(0.5 * h) - backward(h)) / 3.0;
}

double period_derivative_integral(const PotentialSystem& sys, double c, const PeriodOptions& opts) {
  const TurningPoints tp = turning_points(sys, c, opts);
  const double x0 = sys.center();
  const double slope0 = -sys.force_curvature(x0) / (3.0 * sys.force_slope(x0));
  auto weight = [&](double u) {
    const double d = u - x0;
    if (std::abs(d) < 1e-4 * x0) return slope0 * d;
    const double phi = sys.force(u);
    return (phi * phi - 2.0 * sys.potential(u) * sys.force_slope(u)) / (phi * phi);
  };
  const Integral in = turning_integral(sys, tp, weight, opts.rel_tol);
  return in.value / (std::numbers::sqrt2 * c);
}

PeriodTable period_table(const PotentialSystem& sys, std::vector<double> energies,
                         const PeriodOptions& opts, unsigned threads) {
  std::sort(energies.begin(), energies.end());
  const std::size_t count = energies.size();
  std::vector<std::optional<PeriodSample>> rows(count);
  std::vector<std::optional<PeriodTableError>> errors(count);

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < count; i += stride) {
      try {
        PeriodSample s = period(sys, energies[i], opts);
        s.derivative = period_derivative(sys, energies[i], opts);
        rows[i] = s;
      } catch (const Error& e) {
        errors[i] = PeriodTableError{energies[i], e.reason(), e.what()};
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  PeriodTable table;
  for (std::size_t i = 0; i < count; ++i) {
    if (rows[i]) table.rows.push_back(*rows[i]);
    if (errors[i]) table.errors.push_back(*errors[i]);
  }
  return table;
}

CertificateReport monotonicity_certificate(int n, const CertificateGrid& grid) {
  validate_dimension(n);
  if (!(grid.lo > 0.0) || !(grid.hi > grid.lo) || grid.count < 2 || !(grid.center_gap >= 0.0))
    throw ParameterError("certificate grid must satisfy 0 < lo < hi and count >= 2");

  const PotentialSystem sys = normalized_system(n);
  const double e = 4.0 / n;
  const double g1_center = e;
  const double g2_center = e * (1.0 - e);
  const double cubic = g2_center / (3.0 * g1_center * g1_center);

  CertificateReport r;
  r.n = n;
  r.H_positive = r.Delta_nonnegative = r.curvature_nonnegative = true;
  r.H_min = r.Delta_min = std::numeric_limits<double>::infinity();
  const double step = (grid.hi - grid.lo) / static_cast<double>(grid.count - 1);
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double x = grid.lo + step * static_cast<double>(i);
    if (std::abs(x - 1.0) < grid.center_gap) continue;
    const double g = x - std::pow(x, 1.0 - e);
    const double g1 = 1.0 - (1.0 - e) * std::pow(x, -e);
    const double g2 = e * (1.0 - e) * std::pow(x, -1.0 - e);
    const double H = g * g - 2.0 * sys.potential(x) * g1 + cubic * g * g * g;
    const double D = (x - 1.0) * (g1 * g2_center - g1_center * g2);
    r.grid.push_back(x);
    r.H_values.push_back(H);
    r.Delta_values.push_back(D);
    r.H_positive = r.H_positive && H > 0.0;
    r.Delta_nonnegative = r.Delta_nonnegative && D >= 0.0;
    r.curvature_nonnegative = r.curvature_nonnegative && g2 >= 0.0;
    r.H_min = std::min(r.H_min, H);
    r.Delta_min = std::min(r.Delta_min, D);
  }
  if (r.grid.empty()) throw ParameterError("certificate grid is empty after removing the center");

  if (n == 4) {
    r.notes.push_back("force is affine (g = f - 1): H and Delta vanish identically and the period is constant");
  } else if (!r.curvature_nonnegative) {
    r.notes.push_back("g'' < 0 on the grid: the Delta criterion does not apply; H evaluated directly");
  } else if (r.Delta_nonnegative) {
    r.notes.push_back("g'' >= 0 and Delta >= 0 on the grid: H > 0 is implied");
  }
  if (n != 4) {
    r.notes.push_back(r.H_positive ? "H > 0 on the grid: the period map is non-decreasing"
                                   : "H is not positive on the grid: no monotonicity conclusion");
  }
  return r;
}

}  // namespace wm
