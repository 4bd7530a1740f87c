#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/kernels.hpp"
#include "support.hpp"

namespace kn = darboux_dirac::kernels;
using test_support::Gen;

namespace {

/// Restores the dispatched backend when a test case ends.
struct BackendGuard {
  kn::Backend saved = kn::active_backend();
  ~BackendGuard() { kn::set_backend(saved); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar backend is always available") {
  CHECK(kn::backend_available(kn::Backend::scalar));
  CHECK(kn::backend_name(kn::Backend::scalar) == "scalar");
  BackendGuard guard;
  kn::set_backend(kn::Backend::scalar);
  CHECK(kn::active_backend() == kn::Backend::scalar);
}

TEST_CASE("property: avx2 Kummer sweep is bitwise equal to scalar") {
  if (!kn::backend_available(kn::Backend::avx2)) {
    MESSAGE("avx2 not available on this CPU");
    return;
  }
  Gen g(test_support::kSeed + 20);
  for (int i = 0; i < 300; ++i) {
    const double a = g.uniform(-6.0, 6.0);
    const double b = g.uniform(0.3, 6.0);
    const int len = g.integer(0, 19);
    std::vector<double> xs(len);
    for (auto& x : xs) x = g.coin() ? g.uniform(0.0, 50.0) : 0.0;
    std::vector<double> s(len), v(len);
    INFO("a=" << a << " b=" << b << " len=" << len);
    kn::scalar::kummer_series(a, b, xs, s, {});
    kn::avx2::kummer_series(a, b, xs, v, {});
    for (int k = 0; k < len; ++k) CHECK(s[k] == v[k]);
  }
}

TEST_CASE("property: avx2 dot and max_abs match scalar") {
  if (!kn::backend_available(kn::Backend::avx2)) return;
  Gen g(test_support::kSeed + 21);
  for (int i = 0; i < 300; ++i) {
    const int len = g.integer(0, 33);
    std::vector<double> a(len), b(len);
    double mag = 0.0;
    for (int k = 0; k < len; ++k) {
      a[k] = g.uniform(-5, 5);
      b[k] = g.uniform(-5, 5);
      mag += std::abs(a[k] * b[k]);
    }
    CHECK(std::abs(kn::avx2::dot(a, b) - kn::scalar::dot(a, b)) <= 1e-14 * (1 + mag));
    CHECK(kn::avx2::max_abs(a) == kn::scalar::max_abs(a));
  }
}

TEST_CASE("max_abs propagates NaN and handles empty input") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> v{1.0, -3.0, nan, 2.0, 0.0, 1.0};
  CHECK(std::isnan(kn::scalar::max_abs(v)));
  CHECK(std::isnan(kn::max_abs(v)));
  if (kn::backend_available(kn::Backend::avx2)) CHECK(std::isnan(kn::avx2::max_abs(v)));
  CHECK(kn::max_abs(std::vector<double>{}) == 0.0);
  CHECK(kn::max_abs(std::vector<double>{-7.5, 3.0}) == 7.5);
}

TEST_CASE("dispatch follows set_backend") {
  BackendGuard guard;
  const std::vector<double> xs{0.5, 1.0, 2.0, 4.0, 8.0};
  std::vector<double> s(xs.size()), d(xs.size());
  kn::set_backend(kn::Backend::scalar);
  kn::kummer_series(-0.5, 1.5, xs, s);
  if (kn::backend_available(kn::Backend::avx2)) {
    kn::set_backend(kn::Backend::avx2);
    CHECK(kn::active_backend() == kn::Backend::avx2);
  }
  kn::kummer_series(-0.5, 1.5, xs, d);
  CHECK(s == d);
}

TEST_CASE("term cap raises ConvergenceError on every backend") {
  BackendGuard guard;
  const std::vector<double> xs{1.0, 2.0, 900.0};
  std::vector<double> out(xs.size());
  for (auto b : {kn::Backend::scalar, kn::Backend::avx2}) {
    if (!kn::backend_available(b)) continue;
    kn::set_backend(b);
    CHECK_THROWS_AS(kn::kummer_series(0.5, 1.5, xs, out, {1e-15, 50}),
                    darboux_dirac::ConvergenceError);
  }
}

TEST_CASE("polynomial case terminates exactly") {
  // M(-2, 1, x) = 1 - 2x + x^2/2
  const std::vector<double> xs{0.0, 1.0, 3.0, 10.0, 25.0};
  std::vector<double> out(xs.size());
  kn::kummer_series(-2.0, 1.0, xs, out);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(out[i] == doctest::Approx(1 - 2 * xs[i] + xs[i] * xs[i] / 2).epsilon(1e-14));
  }
}

}  // TEST_SUITE
