#include "darboux_dirac/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>

#include "darboux_dirac/errors.hpp"
#include "kernels_common.hpp"

namespace darboux_dirac::kernels {

namespace {

Backend detect_backend() noexcept {
#if defined(DARBOUX_DIRAC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
  return Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("kernel operands differ in length");
}

}  // namespace

bool backend_available(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(DARBOUX_DIRAC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() noexcept { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw DomainError("SIMD backend " + std::string(backend_name(b)) + " unavailable on this CPU");
  }
  backend_slot().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

void kummer_series(double a, double b, std::span<const double> x, std::span<double> out,
                   SeriesControl ctl) {
  check_sizes(x.size(), out.size());
#if defined(DARBOUX_DIRAC_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::kummer_series(a, b, x, out, ctl);
#endif
  scalar::kummer_series(a, b, x, out, ctl);
}

double dot(std::span<const double> a, std::span<const double> b) {
  check_sizes(a.size(), b.size());
#if defined(DARBOUX_DIRAC_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::dot(a, b);
#endif
  return scalar::dot(a, b);
}

double max_abs(std::span<const double> a) {
#if defined(DARBOUX_DIRAC_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::max_abs(a);
#endif
  return scalar::max_abs(a);
}

namespace scalar {

void kummer_series(double a, double b, std::span<const double> x, std::span<double> out,
                   SeriesControl ctl) {
  check_sizes(x.size(), out.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    double term = 1.0;
    double sum = 1.0;
    bool done = false;
    for (int k = 0; k < ctl.max_terms; ++k) {
      term *= detail::series_coef(a, b, k) * xi;
      sum += term;
      if (term == 0.0) {
        done = true;
        break;
      }
      const double next = detail::series_coef(a, b, k + 1) * xi;
      if (detail::past_growth(a, k) && std::abs(next) < 1.0 &&
          std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
        done = true;
        break;
      }
    }
    if (!done) throw detail::no_convergence(a, b, xi, ctl.max_terms);
    out[i] = sum;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  check_sizes(a.size(), b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) {
    if (std::isnan(v)) return std::numeric_limits<double>::quiet_NaN();
    m = std::max(m, std::abs(v));
  }
  return m;
}

}  // namespace scalar

#if !defined(DARBOUX_DIRAC_HAVE_AVX2)
namespace avx2 {
void kummer_series(double, double, std::span<const double>, std::span<double>, SeriesControl) {
  throw DomainError("AVX2 kernels not compiled in");
}
double dot(std::span<const double>, std::span<const double>) {
  throw DomainError("AVX2 kernels not compiled in");
}
double max_abs(std::span<const double>) { throw DomainError("AVX2 kernels not compiled in"); }
}  // namespace avx2
#endif

}  // namespace darboux_dirac::kernels
