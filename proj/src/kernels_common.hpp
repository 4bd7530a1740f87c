#pragma once

// Shared by the scalar and vector kernels so both evaluate the series
// coefficients with identical floating-point operations.

#include <sstream>

#include "darboux_dirac/errors.hpp"

namespace darboux_dirac::kernels::detail {

/// term_{k+1} / term_k of the Kummer series, divided by x.
inline double series_coef(double a, double b, int k) {
  return (a + k) / ((b + k) * (k + 1));
}

/// Terms with index above -a no longer change sign, so a small term there is
/// not an accident of a near-integer Pochhammer factor.
inline bool past_growth(double a, int k) { return k + 1 > -a; }

inline ConvergenceError no_convergence(double a, double b, double x, int max_terms) {
  std::ostringstream os;
  os.precision(17);
  os << "Kummer series M(" << a << ", " << b << ", " << x << ") did not converge within "
     << max_terms << " terms";
  return ConvergenceError(os.str());
}

}  // namespace darboux_dirac::kernels::detail
