#include <doctest.h>

#include <cmath>

#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/numerics.hpp"
#include "darboux_dirac/oscillator.hpp"
#include "support.hpp"

namespace os = darboux_dirac::oscillator;
using darboux_dirac::make_grid;
using darboux_dirac::parse_grid;
using test_support::laguerre_poly;
using test_support::rel;

namespace {

/// psi_n for integer n from the polynomial recurrence, independent of the
/// Kummer path.
double psi_oracle(double omega, int l, int n, double x) {
  const double k = l + 0.5;
  const double u = omega * x * x / 2;
  const double calL = -(u + k + 1) * laguerre_poly(n, k, u) + laguerre_poly(n - 1, k, u);
  return std::pow(x, l + 1) / (omega * x * x + 2 * l + 1) * std::exp(-omega * x * x / 4) * calL;
}

}  // namespace

TEST_SUITE("oscillator") {

TEST_CASE("grid construction and parsing") {
  const auto g = make_grid(0.2, 8.0, 400);
  CHECK(g.points.size() == 400);
  CHECK(g.points.front() == 0.2);
  CHECK(g.points.back() == 8.0);
  const auto p = parse_grid("0.1:8:1000");
  CHECK(p.count == 1000);
  CHECK(p.xmin == 0.1);
  for (const char* bad : {"", "1:2", "0:1:10", "2:1:10", "0.1:8:1", "a:b:c", "0.1:8:10:3", "0.1:8:2.5"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_grid(bad), darboux_dirac::DomainError);
  }
}

TEST_CASE("potential at hand-substituted points") {
  CHECK(os::potential_v0({1.0, 0, 0.0, 0.0}, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(os::potential_v0({1.0, 1, 0.0, 0.0}, 1.0) == doctest::Approx(1.75).epsilon(1e-15));
  const os::ModelParams p{2.0, 0, 0.0, 0.0};
  CHECK(os::potential_v0(p, 1e3) / (0.25 * 4.0 * 1e6) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(os::potential_v0(p, 0.0), darboux_dirac::DomainError);
}

TEST_CASE("energies") {
  CHECK(os::energy({1.0, 1, 0.0, 0.0}) == 2.5);
  CHECK(os::energy({1.0, 1, 0.0, -1.25}) == 0.0);
  CHECK(os::energy({1.0, 1, 0.0, -0.5}) == 1.5);
  for (double w : {0.5, 1.0, 3.0}) {
    for (double n : {-1.0, 0.0, 2.5}) {
      CHECK(os::energy({w, 2, 0.0, n + 1}) - os::energy({w, 2, 0.0, n}) == doctest::Approx(2 * w));
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(os::validate({0.0, 1, 0.0, 0.0}), darboux_dirac::DomainError);
  CHECK_THROWS_AS(os::validate({1.0, -1, 0.0, 0.0}), darboux_dirac::DomainError);
  CHECK_THROWS_AS(os::validate({1.0, 1, -1.0, 0.0}), darboux_dirac::DomainError);
  CHECK_NOTHROW(os::validate({1.0, 1, 0.0, -0.5}));
}

TEST_CASE("eigenfunction matches the polynomial oracle") {
  for (double w : {1.0, 2.0}) {
    for (int l : {0, 1, 2}) {
      for (int n : {0, 1, 2, 3}) {
        const auto psi = os::eigenfunction({w, l, 0.0, double(n)});
        for (double x : {0.3, 1.0, 2.7, 6.0}) {
          INFO("w=" << w << " l=" << l << " n=" << n << " x=" << x);
          CHECK(rel(psi.value(x), psi_oracle(w, l, n, x)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("eigenfunction vanishes at the origin") {
  for (double n : {0.0, 1.0, -0.5}) {
    const auto psi = os::eigenfunction({1.0, 1, 0.0, n});
    CHECK(std::abs(psi.value(1e-4)) < 1e-7);
  }
}

TEST_CASE("batch sampling equals pointwise evaluation") {
  const auto psi = os::eigenfunction({1.0, 1, 0.0, -0.5});
  CHECK(psi.has_batch());
  const auto g = make_grid(0.1, 9.0, 53);
  const auto jets = psi.sample(g.points, 2);
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const auto p = psi(g.points[i], 2);
    for (int k = 0; k <= 2; ++k) CHECK(rel(jets[i].derivative(k), p.derivative(k)) < 1e-13);
  }
}

TEST_CASE("property: Schrodinger residual of every bound state") {
  const auto g = make_grid(0.2, 8.0, 400);
  for (double w : {1.0, 2.0}) {
    for (int l : {0, 1, 2}) {
      const os::ModelParams base{w, l, 0.0, 0.0};
      const auto v = os::potential(base);
      for (int n : {0, 1, 2, 3}) {
        const auto state = os::with_index(base, n);
        INFO("w=" << w << " l=" << l << " n=" << n);
        CHECK(os::schrodinger_residual(os::eigenfunction(state), os::energy(state), v, g) < 1e-8);
      }
    }
  }
}

TEST_CASE("real indices also solve the equation") {
  const auto g = make_grid(0.2, 8.0, 400);
  const os::ModelParams base{1.0, 1, 0.0, 0.0};
  for (double n : {-1.25, -0.5, 1.5, 1.25, -1e-4}) {
    const auto state = os::with_index(base, n);
    INFO("n=" << n);
    CHECK(os::schrodinger_residual(os::eigenfunction(state), os::energy(state), os::potential(base), g) < 1e-8);
  }
}

TEST_CASE("residual detects a wrong energy and ignores the zero field") {
  const auto g = make_grid(0.2, 8.0, 400);
  const os::ModelParams p{1.0, 1, 0.0, 0.0};
  const auto psi = os::eigenfunction(p);
  CHECK(os::schrodinger_residual(psi, os::energy(p) + 1.0, os::potential(p), g) > 1e-2);
  CHECK(os::schrodinger_residual(darboux_dirac::constant_field(0.0), 2.5, os::potential(p), g) == 0.0);
}

TEST_CASE("decay and orthogonality") {
  const auto g = make_grid(0.2, 8.0, 400);
  const auto w = darboux_dirac::numerics::normalization_window(1.0);
  std::vector<darboux_dirac::ScalarField> unit;
  for (int n : {0, 1, 2}) {
    const os::ModelParams p{1.0, 1, 0.0, double(n)};
    unit.push_back(os::normalized_eigenfunction(p));
    CHECK(std::abs(darboux_dirac::numerics::norm_squared(unit.back(), w.lo, w.hi) - 1.0) < 1e-10);
  }
  // Ground and first excited states are below 1e-4 of their peak at x = 8.
  for (int n : {0, 1}) {
    double peak = 0.0;
    for (double x : g.points) peak = std::max(peak, std::abs(unit[n].value(x)));
    CHECK(std::abs(unit[n].value(8.0)) < 1e-4 * peak);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto r = darboux_dirac::numerics::integrate(
          [&](double x) { return unit[i].value(x) * unit[j].value(x); }, w.lo, w.hi, 1e-12);
      CHECK(std::abs(r.value) < 1e-6);
    }
  }
}

}  // TEST_SUITE
