#pragma once

#include <array>
#include <span>
#include <vector>

namespace darboux_dirac {

/// Highest derivative order a Jet can carry.
inline constexpr int kMaxJetOrder = 12;

/// Value and derivatives f(x), f'(x), ..., f^(K)(x) of a scalar function at a
/// point x.
///
/// Internally the jet is stored as normalized Taylor coefficients
/// t_k = f^(k)(x) / k!, which turns products into Cauchy products and makes
/// composition a truncated power series substitution. The public accessors
/// speak in derivatives.
class Jet {
 public:
  Jet() = default;

  /// The identity function t -> t expanded at x.
  static Jet variable(double x, int order);
  static Jet constant(double x, double value, int order);
  /// derivs = (f(x), f'(x), ..., f^(K)(x)).
  static Jet from_derivatives(double x, std::span<const double> derivs);
  static Jet from_taylor(double x, std::span<const double> taylor);

  double x() const noexcept { return x_; }
  int order() const noexcept { return order_; }
  double value() const noexcept { return t_[0]; }
  /// k-th derivative f^(k)(x); k <= order().
  double derivative(int k) const;
  /// Normalized Taylor coefficient f^(k)(x) / k!.
  double taylor(int k) const;
  /// (f, f', ..., f^(K)), K + 1 entries.
  std::vector<double> coeffs() const;
  bool all_finite() const noexcept;

  Jet truncated(int order) const;
  /// Jet of f' at the same point; order drops by one.
  Jet differentiated() const;
  /// Jet of the antiderivative F with F(x) = value and F' = *this; order
  /// rises by one.
  Jet integrated(double value) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs);
  Jet& operator/=(const Jet& rhs);
  Jet& operator+=(double c);
  Jet& operator-=(double c);
  Jet& operator*=(double c);
  Jet& operator/=(double c);

 private:
  double x_ = 0.0;
  int order_ = 0;
  std::array<double, kMaxJetOrder + 1> t_{};
};

Jet operator+(Jet lhs, const Jet& rhs);
Jet operator-(Jet lhs, const Jet& rhs);
Jet operator*(const Jet& lhs, const Jet& rhs);
Jet operator/(const Jet& lhs, const Jet& rhs);
Jet operator+(Jet lhs, double c);
Jet operator+(double c, Jet rhs);
Jet operator-(Jet lhs, double c);
Jet operator-(double c, const Jet& rhs);
Jet operator*(Jet lhs, double c);
Jet operator*(double c, Jet rhs);
Jet operator/(Jet lhs, double c);
Jet operator/(double c, const Jet& rhs);

Jet exp(const Jet& a);
/// Natural logarithm; requires a.value() > 0.
Jet log(const Jet& a);
/// Real power; requires a.value() > 0 unless p is a nonnegative integer.
Jet pow(const Jet& a, double p);
/// Integer power by repeated squaring; valid at a.value() == 0.
Jet powi(const Jet& a, int n);
Jet sqr(const Jet& a);

/// outer(inner(x)): `outer` is the jet of g at u0 = inner.value(), the result
/// is the jet of g o inner at inner.x(). Order is the smaller of the two.
Jet compose(const Jet& outer, const Jet& inner);

}  // namespace darboux_dirac
