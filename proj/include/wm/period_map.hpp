#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wm/potential.hpp"

namespace wm {

/// Abscissae where an orbit of energy c has zero velocity: G(a) = G(b) = c.
struct TurningPoints {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct PeriodOptions {
  /// Successive Gauss orders must agree to this relative tolerance.
  double rel_tol = 1e-11;
  /// Estimated relative error above which the period is rejected.
  double max_error = 1e-8;
  /// Energies above energy_cutoff * c_max are rejected.
  double energy_cutoff = 1.0 - 1e-6;
};

struct PeriodSample {
  double c = 0.0;
  TurningPoints turning;
  double period = 0.0;
  std::optional<double> derivative;
  double error_estimate = 0.0;
};

/// Throws EnergyRangeError unless 0 < c <= cutoff * c_max.
void require_admissible_energy(const PotentialSystem& sys, double c, const PeriodOptions& opts);

TurningPoints turning_points(const PotentialSystem& sys, double c, const PeriodOptions& opts = {});

/// Minimal period T(c) = sqrt(2) * int_a^b du / sqrt(c - G(u)).
///
/// The substitution u = a + (b - a) sin^2(theta) removes both inverse square
/// root singularities. When the left turning point approaches the domain
/// boundary the panels are graded geometrically toward theta = 0 so that the
/// boundary layer of width ~a is resolved; the Gauss order is then doubled
/// until two successive orders agree.
PeriodSample period(const PotentialSystem& sys, double c, const PeriodOptions& opts = {});

/// dT/dc by Richardson-extrapolated differences of period(): centered in the
/// interior, one-sided when c is within one step of the cutoff.
double period_derivative(const PotentialSystem& sys, double c, const PeriodOptions& opts = {});

/// dT/dc from the integral representation
///   T'(c) = 1/(sqrt(2) c) * int_a^b (phi^2 - 2 G phi') / phi^2 du / sqrt(c - G).
/// The integrand has a removable zero at the center, where it is replaced by
/// its linear Taylor term.
double period_derivative_integral(const PotentialSystem& sys, double c,
                                  const PeriodOptions& opts = {});

/// One failed row of a period table.
struct PeriodTableError {
  double c = 0.0;
  std::string reason;
  std::string message;
};

struct PeriodTable {
  std::vector<PeriodSample> rows;  // sorted by energy, derivative filled in
  std::vector<PeriodTableError> errors;
};

/// Evaluates energies in parallel (up to `threads` workers, 0 = hardware) and
/// collects per-entry failures instead of stopping at the first.
PeriodTable period_table(const PotentialSystem& sys, std::vector<double> energies,
                         const PeriodOptions& opts = {}, unsigned threads = 0);

/// Chow-Wang type sufficient condition for a monotone period, evaluated for
/// the normalized force g(f) = f - f^{1-4/n}:
///   H(x) = g^2 - 2 G g' + g''(1) / (3 g'(1)^2) g^3,
///   Delta(x) = (x - 1) [g'(x) g''(1) - g'(1) g''(x)].
struct CertificateGrid {
  double lo = 0.05;
  double hi = 4.0;
  std::size_t count = 2000;
  /// Points with |x - 1| < center_gap are dropped.
  double center_gap = 1e-3;
};

struct CertificateReport {
  int n = 0;
  std::vector<double> grid;
  std::vector<double> H_values;
  std::vector<double> Delta_values;
  bool H_positive = false;
  bool Delta_nonnegative = false;
  bool curvature_nonnegative = false;  // g'' >= 0 on the grid
  double H_min = 0.0;
  double Delta_min = 0.0;
  std::vector<std::string> notes;
};

CertificateReport monotonicity_certificate(int n, const CertificateGrid& grid = {});

}  // namespace wm
