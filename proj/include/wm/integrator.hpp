#pragma once

#include <span>
#include <vector>

namespace wm {

/// Fixed-step symplectic integrator for x'' = -phi(x): Stormer-Verlet
/// (kick-drift-kick) raised to even order 2, 4, 6 or 8 by the recursive
/// triple-jump composition S_{2k+2}(h) = S_{2k}(w1 h) S_{2k}(w0 h) S_{2k}(w1 h),
/// w1 = 1 / (2 - 2^{1/(2k+1)}), w0 = 1 - 2 w1.
class SymplecticStepper {
 public:
  explicit SymplecticStepper(int order = 4);

  int order() const noexcept { return order_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Advances (x, v) by `steps` steps of size dt. `force_value` must hold
  /// phi(x) on entry and holds phi(x) on exit, so consecutive calls reuse it.
  template <class Force>
  void advance(double& x, double& v, double& force_value, double dt, long steps,
               Force&& force) const {
    for (long s = 0; s < steps; ++s) {
      for (double w : weights_) {
        const double h = w * dt;
        v -= 0.5 * h * force_value;
        x += h * v;
        force_value = force(x);
        v -= 0.5 * h * force_value;
      }
    }
  }

 private:
  int order_;
  std::vector<double> weights_;
};

}  // namespace wm
