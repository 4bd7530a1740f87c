#include "darboux_dirac/jet.hpp"

#include <algorithm>
#include <cmath>

#include "darboux_dirac/errors.hpp"

namespace darboux_dirac {

namespace {

constexpr std::array<double, kMaxJetOrder + 1> make_factorials() {
  std::array<double, kMaxJetOrder + 1> f{};
  f[0] = 1.0;
  for (int k = 1; k <= kMaxJetOrder; ++k) f[k] = f[k - 1] * k;
  return f;
}

constexpr auto kFactorial = make_factorials();

void check_order(int order) {
  if (order < 0 || order > kMaxJetOrder) {
    throw DomainError("jet order " + std::to_string(order) + " outside [0, " +
                      std::to_string(kMaxJetOrder) + "]");
  }
}

}  // namespace

Jet Jet::variable(double x, int order) {
  check_order(order);
  Jet j;
  j.x_ = x;
  j.order_ = order;
  j.t_[0] = x;
  if (order >= 1) j.t_[1] = 1.0;
  return j;
}

Jet Jet::constant(double x, double value, int order) {
  check_order(order);
  Jet j;
  j.x_ = x;
  j.order_ = order;
  j.t_[0] = value;
  return j;
}

Jet Jet::from_derivatives(double x, std::span<const double> derivs) {
  if (derivs.empty()) throw DomainError("jet needs at least a value");
  const int order = static_cast<int>(derivs.size()) - 1;
  check_order(order);
  Jet j;
  j.x_ = x;
  j.order_ = order;
  for (int k = 0; k <= order; ++k) j.t_[k] = derivs[k] / kFactorial[k];
  return j;
}

Jet Jet::from_taylor(double x, std::span<const double> taylor) {
  if (taylor.empty()) throw DomainError("jet needs at least a value");
  const int order = static_cast<int>(taylor.size()) - 1;
  check_order(order);
  Jet j;
  j.x_ = x;
  j.order_ = order;
  std::copy(taylor.begin(), taylor.end(), j.t_.begin());
  return j;
}

double Jet::derivative(int k) const {
  if (k < 0 || k > order_) {
    throw DomainError("derivative " + std::to_string(k) + " not carried by jet of order " +
                      std::to_string(order_));
  }
  return t_[k] * kFactorial[k];
}

double Jet::taylor(int k) const {
  if (k < 0 || k > order_) {
    throw DomainError("coefficient " + std::to_string(k) + " not carried by jet of order " +
                      std::to_string(order_));
  }
  return t_[k];
}

std::vector<double> Jet::coeffs() const {
  std::vector<double> d(order_ + 1);
  for (int k = 0; k <= order_; ++k) d[k] = t_[k] * kFactorial[k];
  return d;
}

bool Jet::all_finite() const noexcept {
  return std::all_of(t_.begin(), t_.begin() + order_ + 1,
                     [](double v) { return std::isfinite(v); });
}

Jet Jet::truncated(int order) const {
  if (order > order_) {
    throw DomainError("cannot raise jet order from " + std::to_string(order_) + " to " +
                      std::to_string(order));
  }
  check_order(order);
  Jet j = *this;
  j.order_ = order;
  std::fill(j.t_.begin() + order + 1, j.t_.end(), 0.0);
  return j;
}

Jet Jet::differentiated() const {
  if (order_ == 0) throw DomainError("cannot differentiate an order-0 jet");
  Jet j;
  j.x_ = x_;
  j.order_ = order_ - 1;
  for (int k = 0; k < order_; ++k) j.t_[k] = (k + 1) * t_[k + 1];
  return j;
}

Jet Jet::integrated(double value) const {
  check_order(order_ + 1);
  Jet j;
  j.x_ = x_;
  j.order_ = order_ + 1;
  j.t_[0] = value;
  for (int k = 0; k <= order_; ++k) j.t_[k + 1] = t_[k] / (k + 1);
  return j;
}

Jet Jet::operator-() const {
  Jet j = *this;
  for (int k = 0; k <= order_; ++k) j.t_[k] = -t_[k];
  return j;
}

Jet& Jet::operator+=(const Jet& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (int k = 0; k <= order_; ++k) t_[k] += rhs.t_[k];
  std::fill(t_.begin() + order_ + 1, t_.end(), 0.0);
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (int k = 0; k <= order_; ++k) t_[k] -= rhs.t_[k];
  std::fill(t_.begin() + order_ + 1, t_.end(), 0.0);
  return *this;
}

Jet& Jet::operator*=(const Jet& rhs) {
  *this = *this * rhs;
  return *this;
}

Jet& Jet::operator/=(const Jet& rhs) {
  *this = *this / rhs;
  return *this;
}

Jet& Jet::operator+=(double c) {
  t_[0] += c;
  return *this;
}

Jet& Jet::operator-=(double c) {
  t_[0] -= c;
  return *this;
}

Jet& Jet::operator*=(double c) {
  for (int k = 0; k <= order_; ++k) t_[k] *= c;
  return *this;
}

Jet& Jet::operator/=(double c) {
  for (int k = 0; k <= order_; ++k) t_[k] /= c;
  return *this;
}

Jet operator+(Jet lhs, const Jet& rhs) { return lhs += rhs; }
Jet operator-(Jet lhs, const Jet& rhs) { return lhs -= rhs; }

Jet operator*(const Jet& lhs, const Jet& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  std::array<double, kMaxJetOrder + 1> c{};
  for (int k = 0; k <= order; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += lhs.taylor(j) * rhs.taylor(k - j);
    c[k] = s;
  }
  return Jet::from_taylor(lhs.x(), std::span<const double>(c.data(), order + 1));
}

Jet operator/(const Jet& lhs, const Jet& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  const double b0 = rhs.value();
  std::array<double, kMaxJetOrder + 1> c{};
  for (int k = 0; k <= order; ++k) {
    double s = lhs.taylor(k);
    for (int j = 1; j <= k; ++j) s -= rhs.taylor(j) * c[k - j];
    c[k] = s / b0;
  }
  return Jet::from_taylor(lhs.x(), std::span<const double>(c.data(), order + 1));
}

Jet operator+(Jet lhs, double c) { return lhs += c; }
Jet operator+(double c, Jet rhs) { return rhs += c; }
Jet operator-(Jet lhs, double c) { return lhs -= c; }
Jet operator-(double c, const Jet& rhs) { return (-rhs) += c; }
Jet operator*(Jet lhs, double c) { return lhs *= c; }
Jet operator*(double c, Jet rhs) { return rhs *= c; }
Jet operator/(Jet lhs, double c) { return lhs /= c; }
Jet operator/(double c, const Jet& rhs) {
  return Jet::constant(rhs.x(), c, rhs.order()) / rhs;
}

Jet exp(const Jet& a) {
  const int order = a.order();
  std::array<double, kMaxJetOrder + 1> e{};
  e[0] = std::exp(a.value());
  for (int k = 1; k <= order; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a.taylor(j) * e[k - j];
    e[k] = s / k;
  }
  return Jet::from_taylor(a.x(), std::span<const double>(e.data(), order + 1));
}

Jet log(const Jet& a) {
  const int order = a.order();
  const double a0 = a.value();
  if (!(a0 > 0.0)) throw DomainError("log of a jet with nonpositive value");
  std::array<double, kMaxJetOrder + 1> l{};
  l[0] = std::log(a0);
  for (int k = 1; k <= order; ++k) {
    double s = 0.0;
    for (int j = 1; j < k; ++j) s += j * l[j] * a.taylor(k - j);
    l[k] = (a.taylor(k) - s / k) / a0;
  }
  return Jet::from_taylor(a.x(), std::span<const double>(l.data(), order + 1));
}

Jet pow(const Jet& a, double p) {
  if (p == std::floor(p) && p >= 0.0 && p <= 64.0) return powi(a, static_cast<int>(p));
  const int order = a.order();
  const double a0 = a.value();
  if (!(a0 > 0.0)) throw DomainError("non-integer power of a jet with nonpositive value");
  std::array<double, kMaxJetOrder + 1> b{};
  b[0] = std::pow(a0, p);
  for (int k = 1; k <= order; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += ((p + 1.0) * j - k) * a.taylor(j) * b[k - j];
    b[k] = s / (k * a0);
  }
  return Jet::from_taylor(a.x(), std::span<const double>(b.data(), order + 1));
}

Jet powi(const Jet& a, int n) {
  if (n < 0) return 1.0 / powi(a, -n);
  Jet result = Jet::constant(a.x(), 1.0, a.order());
  Jet base = a;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Jet sqr(const Jet& a) { return a * a; }

Jet compose(const Jet& outer, const Jet& inner) {
  const int order = std::min(outer.order(), inner.order());
  // delta(h) = inner(x + h) - inner(x), a series without constant term.
  std::array<double, kMaxJetOrder + 1> delta{};
  for (int k = 1; k <= order; ++k) delta[k] = inner.taylor(k);

  std::array<double, kMaxJetOrder + 1> result{};
  std::array<double, kMaxJetOrder + 1> power{};  // delta^j
  power[0] = 1.0;
  result[0] = outer.taylor(0);
  for (int j = 1; j <= order; ++j) {
    std::array<double, kMaxJetOrder + 1> next{};
    // delta^j has no terms below h^j.
    for (int k = j; k <= order; ++k) {
      double s = 0.0;
      for (int i = 1; i <= k - j + 1; ++i) s += delta[i] * power[k - i];
      next[k] = s;
    }
    power = next;
    const double g = outer.taylor(j);
    for (int k = j; k <= order; ++k) result[k] += g * power[k];
  }
  return Jet::from_taylor(inner.x(), std::span<const double>(result.data(), order + 1));
}

}  // namespace darboux_dirac
