#include "darboux_dirac/specfun.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/kernels.hpp"

namespace darboux_dirac::specfun {

namespace {

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

std::string describe(const char* what, double a, double b) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (" << a << ", " << b << ")";
  return os.str();
}

void check_kummer_args(double a, double b, int order) {
  if (is_nonpositive_integer(b)) {
    throw DomainError(describe("Kummer M undefined for nonpositive integer b", a, b));
  }
  if (order < 0 || order > kMaxKummerOrder) {
    throw DomainError("Kummer derivative order " + std::to_string(order) +
                      " outside [0, " + std::to_string(kMaxKummerOrder) + "]");
  }
}

void check_x(double x) {
  if (!(x >= 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "Kummer M evaluated at negative or NaN argument x=" << x;
    throw DomainError(os.str());
  }
}

/// (a)_k / (b)_k for k = 0..order.
std::array<double, kMaxKummerOrder + 1> pochhammer_ratios(double a, double b, int order) {
  std::array<double, kMaxKummerOrder + 1> r{};
  r[0] = 1.0;
  for (int k = 1; k <= order; ++k) r[k] = r[k - 1] * (a + k - 1) / (b + k - 1);
  return r;
}

/// Gamma(nu+alpha+1) / (Gamma(nu+1) Gamma(alpha+1)); 0 when nu is a negative
/// integer.
double laguerre_prefactor(LaguerreIndex idx) {
  const double inv = rgamma(idx.nu + 1.0);
  if (inv == 0.0) return 0.0;
  const double top = idx.nu + idx.alpha + 1.0;
  if (is_nonpositive_integer(top)) {
    throw DomainError(describe("Laguerre prefactor pole at (nu, alpha) =", idx.nu, idx.alpha));
  }
  return std::tgamma(top) * inv * rgamma(idx.alpha + 1.0);
}

}  // namespace

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

Jet kummer_m(double a, double b, double x, int order) {
  check_kummer_args(a, b, order);
  check_x(x);
  const auto ratios = pochhammer_ratios(a, b, order);
  std::array<double, kMaxKummerOrder + 1> derivs{};
  for (int k = 0; k <= order; ++k) {
    if (ratios[k] == 0.0) continue;  // (a)_k vanished; so do all higher ones
    double m = 0.0;
    kernels::scalar::kummer_series(a + k, b + k, std::span<const double>(&x, 1),
                                   std::span<double>(&m, 1), kernels::SeriesControl{});
    derivs[k] = ratios[k] * m;
  }
  return Jet::from_derivatives(x, std::span<const double>(derivs.data(), order + 1));
}

std::vector<Jet> kummer_m_batch(double a, double b, std::span<const double> xs, int order) {
  check_kummer_args(a, b, order);
  for (double x : xs) check_x(x);
  const auto ratios = pochhammer_ratios(a, b, order);
  const std::size_t n = xs.size();
  // derivs[k * n + i] = k-th derivative at xs[i]
  std::vector<double> derivs((order + 1) * n, 0.0);
  std::vector<double> series(n);
  for (int k = 0; k <= order; ++k) {
    if (ratios[k] == 0.0) continue;
    kernels::kummer_series(a + k, b + k, xs, series);
    for (std::size_t i = 0; i < n; ++i) derivs[k * n + i] = ratios[k] * series[i];
  }
  std::vector<Jet> out;
  out.reserve(n);
  std::array<double, kMaxKummerOrder + 1> d{};
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k <= order; ++k) d[k] = derivs[k * n + i];
    out.push_back(Jet::from_derivatives(xs[i], std::span<const double>(d.data(), order + 1)));
  }
  return out;
}

Jet laguerre(LaguerreIndex idx, double x, int order) {
  const double pre = laguerre_prefactor(idx);
  if (pre == 0.0) {
    check_kummer_args(-idx.nu, idx.alpha + 1.0, order);
    return Jet::constant(x, 0.0, order);
  }
  return kummer_m(-idx.nu, idx.alpha + 1.0, x, order) * pre;
}

std::vector<Jet> laguerre_batch(LaguerreIndex idx, std::span<const double> xs, int order) {
  const double pre = laguerre_prefactor(idx);
  if (pre == 0.0) {
    check_kummer_args(-idx.nu, idx.alpha + 1.0, order);
    std::vector<Jet> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(Jet::constant(x, 0.0, order));
    return out;
  }
  auto out = kummer_m_batch(-idx.nu, idx.alpha + 1.0, xs, order);
  for (auto& j : out) j *= pre;
  return out;
}

Jet x1_laguerre(LaguerreIndex idx, double x, int order) {
  const Jet lo1 = laguerre({idx.nu - 1.0, idx.alpha}, x, order);
  const Jet lo2 = laguerre({idx.nu - 2.0, idx.alpha}, x, order);
  const Jet t = Jet::variable(x, order);
  return -((t + (idx.alpha + 1.0)) * lo1) + lo2;
}

std::vector<Jet> x1_laguerre_batch(LaguerreIndex idx, std::span<const double> xs, int order) {
  const auto lo1 = laguerre_batch({idx.nu - 1.0, idx.alpha}, xs, order);
  const auto lo2 = laguerre_batch({idx.nu - 2.0, idx.alpha}, xs, order);
  std::vector<Jet> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Jet t = Jet::variable(xs[i], order);
    out.push_back(-((t + (idx.alpha + 1.0)) * lo1[i]) + lo2[i]);
  }
  return out;
}

}  // namespace darboux_dirac::specfun
