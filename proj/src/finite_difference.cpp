#include "wm/finite_difference.hpp"

#include <cstddef>

#include "wm/errors.hpp"

namespace wm {

std::vector<double> periodic_second_difference(std::span<const double> f, double dt) {
  const std::size_t m = f.size();
  if (m < 3) throw ParameterError("periodic difference needs at least 3 samples");
  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double prev = f[(i + m - 1) % m], next = f[(i + 1) % m];
    out[i] = (next - 2.0 * f[i] + prev) / (dt * dt);
  }
  return out;
}

PeriodicDerivatives periodic_derivatives(std::span<const double> f, double dt) {
  const std::size_t m = f.size();
  if (m < 7) throw ParameterError("periodic derivatives need at least 7 samples");
  const long mm = static_cast<long>(m);
  auto at = [&](std::size_t i, long off) {
    return f[static_cast<std::size_t>((static_cast<long>(i) + mm + off) % mm)];
  };
  PeriodicDerivatives d{std::vector<double>(m), std::vector<double>(m), std::vector<double>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    const double m3 = at(i, -3), m2 = at(i, -2), m1 = at(i, -1), p1 = at(i, 1), p2 = at(i, 2), p3 = at(i, 3);
    d.d1[i] = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * dt);
    d.d2[i] = (-p2 + 16.0 * p1 - 30.0 * f[i] + 16.0 * m1 - m2) / (12.0 * dt * dt);
    d.d3[i] = (-p3 + 8.0 * p2 - 13.0 * p1 + 13.0 * m1 - 8.0 * m2 + m3) / (8.0 * dt * dt * dt);
  }
  return d;
}

std::vector<double> first_derivative(std::span<const double> f, double dt) {
  const std::size_t m = f.size();
  if (m < 5) throw ParameterError("first derivative needs at least 5 samples");
  std::vector<double> out(m);
  out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dt);
  out[1] = (f[2] - f[0]) / (2.0 * dt);
  for (std::size_t i = 2; i + 2 < m; ++i)
    out[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * dt);
  out[m - 2] = (f[m - 1] - f[m - 3]) / (2.0 * dt);
  out[m - 1] = (3.0 * f[m - 1] - 4.0 * f[m - 2] + f[m - 3]) / (2.0 * dt);
  return out;
}

}  // namespace wm
