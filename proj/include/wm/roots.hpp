#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/math/tools/toms748_solve.hpp>

#include "wm/errors.hpp"

namespace wm {

/// Bracketed scalar root of `f` on [lo, hi] (TOMS 748). The bracket must
/// straddle a sign change; returns the endpoint of the final bracket with the
/// smaller residual.
template <class F>
double solve_bracketed(F&& f, double lo, double hi, double rel_tol = 1e-15,
                       double abs_tol = 0.0, std::uintmax_t max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(std::signbit(flo) != std::signbit(fhi)))
    throw BracketError("root not bracketed on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  auto done = [&](double a, double b) {
    return std::abs(b - a) <= abs_tol + rel_tol * std::min(std::abs(a), std::abs(b));
  };
  std::uintmax_t iters = max_iter;
  std::pair<double, double> r;
  try {
    r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, iters);
  } catch (const std::exception& e) {
    throw BracketError(std::string("root finder failed: ") + e.what());
  }
  return std::abs(f(r.first)) <= std::abs(f(r.second)) ? r.first : r.second;
}

}  // namespace wm
