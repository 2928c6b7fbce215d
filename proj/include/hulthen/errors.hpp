#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace hulthen {

/// Thrown when a bound-state quantity is requested for a state past its
/// critical screening.  Carries the critical screening value so callers can
/// report how far past threshold the request was.
class UnboundError : public std::runtime_error {
public:
  explicit UnboundError(const std::string& msg,
                        double delta_c = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(msg), delta_c_(delta_c) {}

  double delta_c() const noexcept { return delta_c_; }

private:
  double delta_c_;
};

/// Exactly-at-threshold case (E = 0): not a normalizable bound state, but
/// distinct from being past threshold.
class ThresholdError : public UnboundError {
public:
  explicit ThresholdError(const std::string& msg,
                          double delta_c = std::numeric_limits<double>::quiet_NaN())
      : UnboundError(msg, delta_c) {}
};

/// Numerical failure (quadrature or shooting did not converge).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace hulthen
