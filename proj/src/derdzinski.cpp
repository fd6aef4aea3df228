#include "wm/derdzinski.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wm/errors.hpp"

namespace wm {

void validate_dimension(int n) {
  if (n < 3) throw ParameterError("dimension n must be >= 3 (got " + std::to_string(n) + ")");
}

void ModelParams::validate() const {
  validate_dimension(n);
  if (!(scalar_curvature > 0.0) || !std::isfinite(scalar_curvature))
    throw ParameterError("fiber scalar curvature R must be positive and finite");
  if (!(constant > 0.0) || !std::isfinite(constant))
    throw ParameterError("ODE constant C must be positive and finite");
}

PotentialSystem normalized_system(int n) {
  validate_dimension(n);
  const double e = 1.0 - 4.0 / n;
  return PotentialSystem("derdzinski-normalized", {{1.0, 1.0}, {-1.0, e}});
}

PotentialSystem raw_system(const ModelParams& params) {
  params.validate();
  const int n = params.n;
  const double linear = n * params.constant / 4.0;
  const double source = n * params.scalar_curvature / (4.0 * (n - 1));
  return PotentialSystem("derdzinski-raw", {{linear, 1.0}, {-source, 1.0 - 4.0 / n}});
}

DerivedParams derive_params(const ModelParams& params) {
  params.validate();
  const int n = params.n;
  DerivedParams d;
  d.alpha = raw_system(params).center();

  const double lhs = n * params.scalar_curvature / (4.0 * (n - 1)) * std::pow(d.alpha, 1.0 - 4.0 / n);
  const double rhs = n / 4.0 * params.constant * d.alpha;
  if (std::abs(lhs - rhs) > 1e-12 * std::abs(rhs)) {
    std::ostringstream os;
    os << "constant solution failed its identity check (residual " << lhs - rhs << ")";
    throw AccuracyError(os.str(), std::abs(lhs - rhs));
  }

  d.beta = std::sqrt(n * params.constant / 4.0);
  d.c0 = normalized_system(n).c_max();
  d.min_period = 2.0 * std::numbers::pi / std::sqrt(params.constant);
  return d;
}

double raw_energy(const DerivedParams& d, double normalized_energy) {
  return d.alpha * d.alpha * d.beta * d.beta * normalized_energy;
}

PrintedConstantForms printed_constant_forms(const ModelParams& params) {
  params.validate();
  const double n = params.n, r = params.scalar_curvature, c = params.constant;
  return {std::pow(r / (4.0 * (n - 1.0) * c), 4.0 / n),
          std::pow((n - 1.0) * c / (n * r), -n / 4.0)};
}

}  // namespace wm
