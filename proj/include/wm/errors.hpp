#pragma once

#include <stdexcept>
#include <string>

namespace wm {

/// Failure category; the CLI maps each category to an exit code.
enum class ErrorCategory {
  parameter,  // invalid input, exit code 2
  numerical,  // non-closure, accuracy not reached, bracket failure, exit code 3
  io,         // unreadable or malformed files, exit code 4
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string reason, const std::string& message)
      : std::runtime_error(message), category_(category), reason_(std::move(reason)) {}

  ErrorCategory category() const noexcept { return category_; }
  /// Short machine-parsable token, e.g. "energy-out-of-range".
  const std::string& reason() const noexcept { return reason_; }

 private:
  ErrorCategory category_;
  std::string reason_;
};

struct ParameterError : Error {
  explicit ParameterError(const std::string& msg)
      : Error(ErrorCategory::parameter, "parameter-validation", msg) {}
};

struct EnergyRangeError : Error {
  explicit EnergyRangeError(const std::string& msg)
      : Error(ErrorCategory::parameter, "energy-out-of-range", msg) {}
};

struct BracketError : Error {
  explicit BracketError(const std::string& msg)
      : Error(ErrorCategory::numerical, "bracket-failure", msg) {}
};

struct AccuracyError : Error {
  AccuracyError(const std::string& msg, double achieved)
      : Error(ErrorCategory::numerical, "accuracy-not-reached", msg), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

struct ClosureError : Error {
  ClosureError(const std::string& msg, double distance)
      : Error(ErrorCategory::numerical, "non-closure", msg), distance_(distance) {}
  double distance() const noexcept { return distance_; }

 private:
  double distance_;
};

/// A prescribed period that the monotone period map cannot reach.
struct TargetUnattainableError : Error {
  /// below_minimum: the target lies on the zero-energy side of the period
  /// range; above_cutoff: it needs an energy beyond the near-critical cutoff.
  enum class Side { below_minimum, above_cutoff, isochronous };

  TargetUnattainableError(Side side, const std::string& msg)
      : Error(ErrorCategory::numerical, side_token(side), msg), side_(side) {}
  Side side() const noexcept { return side_; }

 private:
  static std::string side_token(Side s) {
    switch (s) {
      case Side::below_minimum: return "target-below-minimum";
      case Side::above_cutoff: return "target-above-cutoff";
      case Side::isochronous: return "target-isochronous";
    }
    return "target-unattainable";
  }
  Side side_;
};

struct PositivityError : Error {
  explicit PositivityError(const std::string& msg)
      : Error(ErrorCategory::numerical, "positivity-violation", msg) {}
};

/// NaN or infinity about to be serialized.
struct NonFiniteError : Error {
  explicit NonFiniteError(const std::string& msg)
      : Error(ErrorCategory::numerical, "non-finite-output", msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(ErrorCategory::io, "io", msg) {}
};

}  // namespace wm
