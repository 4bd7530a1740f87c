#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "darboux_dirac/field.hpp"

namespace darboux_dirac::numerics {

using RealFunction = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int panels = 0;
};

/// Maximum number of bisections along any path of the adaptive integrator.
inline constexpr int kMaxQuadratureDepth = 40;

/// Adaptive Simpson quadrature of f over [a, b].
///
/// A panel is accepted once its Richardson error estimate |S2 - S1| / 15 is
/// below abs_tol * width / (b - a); accepted panels contribute the
/// extrapolated value S2 + (S2 - S1) / 15. Throws DomainError unless a < b and
/// DivergenceError past 40 bisections or on a non-finite sample.
QuadratureResult integrate(const RealFunction& f, double a, double b, double abs_tol);

/// Composite Simpson rule on `panels` (even) equal subintervals. Serves as
/// the fixed-grid oracle for the adaptive integrator.
double simpson_uniform(const RealFunction& f, double a, double b, int panels);

/// Step used by fd_derivative for the given derivative order at x.
double fd_step(double x, int order);

/// Fourth-order central difference of order 1 or 2.
double fd_derivative(const RealFunction& f, double x, int order);

/// Interval over which half-line densities are normalized: the Gaussian
/// factor exp(-omega x^2 / 2) leaves a tail below 1e-12 beyond 12 / sqrt(omega).
struct Window {
  double lo = 0.0;
  double hi = 0.0;
};
Window normalization_window(double omega);

/// Integral of f^2 over [a, b].
double norm_squared(const ScalarField& f, double a, double b);
/// Integral of f^2 + g^2 over [a, b].
double norm_squared(const ScalarField& f, const ScalarField& g, double a, double b);

/// f scaled so that its square integrates to one over [a, b]. Throws
/// DomainError for a zero-norm input.
ScalarField normalize(const ScalarField& f, double a, double b);
/// The pair (f, g) scaled by a common factor so that f^2 + g^2 integrates to
/// one over [a, b].
std::pair<ScalarField, ScalarField> normalize(const ScalarField& f, const ScalarField& g,
                                              double a, double b);

struct JetAudit {
  int samples = 0;
  int failures = 0;
  double worst_relative_error = 0.0;
  double worst_x = 0.0;
  int worst_order = 0;
  std::string worst_field;
};

/// Compares first and second Jet derivatives against fd_derivative at
/// `samples` pseudo-random (field, x) pairs drawn uniformly from `fields` and
/// [lo, hi]. The error is measured relative to max(|f|, |f'|, |f''|) at the
/// sample point.
JetAudit jet_fd_audit(std::span<const ScalarField> fields, double lo, double hi, int samples,
                      std::uint64_t seed, double rel_tol);

}  // namespace darboux_dirac::numerics
