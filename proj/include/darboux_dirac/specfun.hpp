#pragma once

// Confluent hypergeometric and Laguerre-type functions with analytic
// derivatives of arbitrary (capped) order.

#include <span>
#include <vector>

#include "darboux_dirac/jet.hpp"

namespace darboux_dirac::specfun {

/// Highest derivative order the Kummer evaluator accepts.
inline constexpr int kMaxKummerOrder = 8;

/// Indices of L_nu^alpha. The lower index may be any real number.
struct LaguerreIndex {
  double nu = 0.0;
  double alpha = 0.0;
};

/// 1/Gamma(x), exactly 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);

/// M(a, b, x) and its x-derivatives up to `order`, using
/// d^k/dx^k M(a, b, x) = (a)_k / (b)_k * M(a + k, b + k, x).
///
/// Requires b not a nonpositive integer, x >= 0 and order <= 8.
Jet kummer_m(double a, double b, double x, int order);

/// Same as kummer_m at every abscissa, sweeping each contiguous series across
/// the whole batch with the dispatched SIMD kernel.
std::vector<Jet> kummer_m_batch(double a, double b, std::span<const double> xs, int order);

/// Generalized Laguerre function
///   L_nu^alpha(x) = Gamma(nu+alpha+1) / (Gamma(nu+1) Gamma(alpha+1)) * M(-nu, alpha+1, x).
/// Identically zero when nu is a negative integer.
Jet laguerre(LaguerreIndex idx, double x, int order);
std::vector<Jet> laguerre_batch(LaguerreIndex idx, std::span<const double> xs, int order);

/// X1 exceptional Laguerre function
///   calL_nu^k(x) = -(x + k + 1) L_{nu-1}^k(x) + L_{nu-2}^k(x),  k = idx.alpha.
Jet x1_laguerre(LaguerreIndex idx, double x, int order);
std::vector<Jet> x1_laguerre_batch(LaguerreIndex idx, std::span<const double> xs, int order);

}  // namespace darboux_dirac::specfun
