#pragma once

// Shared helpers for the unit tests: a seeded generator for property loops
// and a few closed-form fields used as oracles.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "darboux_dirac/field.hpp"
#include "darboux_dirac/grid.hpp"

namespace test_support {

using darboux_dirac::Jet;
using darboux_dirac::ScalarField;

/// Property runs draw from this; the seed is logged through INFO by callers.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
};

inline constexpr std::uint64_t kSeed = 0x6a09e667f3bcc908ULL;

/// exp(a x) as a field with exact derivatives a^k exp(a x).
inline ScalarField exp_field(double a) {
  return ScalarField(
      [a](double x, int order) {
        std::vector<double> d(order + 1);
        double p = 1.0;
        for (int k = 0; k <= order; ++k, p *= a) d[k] = p * std::exp(a * x);
        return Jet::from_derivatives(x, d);
      },
      "exp");
}

/// sin(w x + phase) with derivatives cycling through the quarter turns.
inline ScalarField sin_field(double w, double phase = 0.0) {
  return ScalarField(
      [w, phase](double x, int order) {
        std::vector<double> d(order + 1);
        double p = 1.0;
        for (int k = 0; k <= order; ++k, p *= w) d[k] = p * std::sin(w * x + phase + k * M_PI / 2);
        return Jet::from_derivatives(x, d);
      },
      "sin");
}

inline double rel(double a, double b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s;
}

/// Laguerre polynomial L_n^alpha by the classical three-term recurrence.
inline double laguerre_poly(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace test_support
