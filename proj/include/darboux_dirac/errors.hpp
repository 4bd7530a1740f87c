#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace darboux_dirac {

/// Argument outside the mathematical domain of an operation (gamma poles,
/// x <= 0 for the radial potential, malformed parameters).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series hit its hard term cap before the stopping rule fired.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exceeded its bisection depth or met a non-finite value.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quotient denominator vanished. Carries the offending abscissa.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, double x)
      : std::runtime_error(what + " at x=" + std::to_string(x)), x_(x) {}

  double x() const noexcept { return x_; }

 private:
  double x_;
};

}  // namespace darboux_dirac
