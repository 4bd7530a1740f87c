#include <doctest.h>

#include <cmath>

#include "darboux_dirac/darboux.hpp"
#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/numerics.hpp"
#include "support.hpp"

namespace db = darboux_dirac::darboux;
namespace dr = darboux_dirac::dirac;
namespace os = darboux_dirac::oscillator;
namespace rc = darboux_dirac::riccati;
using darboux_dirac::Grid;
using darboux_dirac::make_grid;
using darboux_dirac::ScalarField;
using test_support::exp_field;
using test_support::rel;
using test_support::sin_field;

namespace {

const os::ModelParams kBase{1.0, 1, 1.0, 0.0};

ScalarField psi_n(double n) { return os::eigenfunction(os::with_index(kBase, n)); }

double max_abs_diff(const ScalarField& a, const ScalarField& b, const Grid& g) {
  double d = 0.0;
  for (double x : g.points) d = std::max(d, std::abs(a.value(x) - b.value(x)));
  return d;
}

}  // namespace

TEST_SUITE("darboux") {

TEST_CASE("config validation") {
  CHECK_THROWS_AS(db::make_config(kBase, std::vector<double>{}), darboux_dirac::DomainError);
  CHECK_THROWS_AS(db::make_config(kBase, {-0.5, 0.5, 1.5, 2.5}), darboux_dirac::DomainError);
  CHECK_THROWS_AS(db::make_config(kBase, {-0.5, -0.5}), darboux_dirac::DomainError);
  const auto cfg = db::make_config(kBase, {-0.5});
  CHECK(cfg.order == 1);
  REQUIRE(cfg.aux_energies.size() == 1);
  CHECK(cfg.aux_energies[0] == 1.5);
  CHECK(cfg.aux_energies[0] < os::energy(kBase));
}

TEST_CASE("Wronskian closed forms") {
  const std::vector<ScalarField> one{exp_field(0.3)};
  CHECK(db::wronskian(one, 1.2).value() == exp_field(0.3).value(1.2));

  const std::vector<ScalarField> same{psi_n(1), psi_n(1)};
  const auto w = db::wronskian(same, 1.7);
  CHECK(w.value() == 0.0);
  CHECK(std::abs(w.derivative(1)) < 1e-14);

  // W(sin, cos) = -1
  const std::vector<ScalarField> trig{sin_field(1.0), sin_field(1.0, M_PI / 2)};
  for (double x : {0.1, 0.9, 2.4}) {
    const auto j = db::wronskian(trig, x);
    CHECK(std::abs(j.value() + 1.0) < 1e-12);
    CHECK(std::abs(j.derivative(1)) < 1e-12);
    CHECK(std::abs(j.derivative(2)) < 1e-12);
  }

  // W(e^{a x}, e^{b x}, e^{c x}) = (b-a)(c-a)(c-b) e^{(a+b+c) x}
  const double a = 0.3, b = -0.7, c = 1.1;
  const std::vector<ScalarField> three{exp_field(a), exp_field(b), exp_field(c)};
  for (double x : {0.2, 1.0}) {
    const double oracle = (b - a) * (c - a) * (c - b) * std::exp((a + b + c) * x);
    const auto j = db::wronskian(three, x);
    CHECK(rel(j.value(), oracle) < 1e-12);
    CHECK(rel(j.derivative(1), (a + b + c) * oracle) < 1e-12);
    CHECK(rel(j.derivative(2), (a + b + c) * (a + b + c) * oracle) < 1e-12);
  }
}

TEST_CASE("Wronskian of a repeated field vanishes at every size") {
  const auto f = psi_n(2);
  const std::vector<ScalarField> pair{f, f};
  const std::vector<ScalarField> triple{psi_n(0), f, f};
  for (double x : {0.3, 2.0, 5.0}) {
    CHECK(db::wronskian(pair, x).value() == 0.0);
    const auto j = db::wronskian(triple, x);
    const std::vector<ScalarField> ref{psi_n(0), f};
    CHECK(std::abs(j.value()) < 1e-12 * (1 + std::abs(db::wronskian(ref, x).value())));
  }
}

TEST_CASE("first-order oracle equivalence") {
  const auto g = make_grid(0.1, 8.0, 400);
  for (double n1 : {-0.5, -1.0 / 50.0}) {
    const auto cfg = db::make_config(kBase, {n1});
    const auto u1 = cfg.aux_fields[0];
    for (int n : {0, 1, 2}) {
      const auto direct = db::darboux_transform(psi_n(n), cfg);
      const auto closed = db::first_order_closed_form(psi_n(n), u1);
      for (double x : g.points) {
        const auto pj = psi_n(n)(x, 1);
        const auto uj = u1(x, 1);
        const double scale = std::max({std::abs(uj.derivative(1) / uj.value() * pj.value()),
                                       std::abs(pj.derivative(1)), 1e-300});
        INFO("n1=" << n1 << " n=" << n << " x=" << x);
        CHECK(std::abs(direct.value(x) - closed.value(x)) / scale < 1e-10);
      }
    }
  }
}

TEST_CASE("transformed states solve the partner equation, the literal reading does not") {
  const auto g = make_grid(0.1, 8.0, 400);
  const auto cfg = db::make_config(kBase, {-0.5});
  CHECK(rc::singularity_scan(cfg.aux_fields[0], make_grid(0.05, 10.0, 2000)).empty());
  const auto v1 = db::transformed_potential(cfg);
  const auto v1_literal = db::transformed_potential(cfg, db::CrumReading::literal_first);
  for (int n : {0, 1, 2}) {
    const auto state = os::with_index(kBase, n);
    const auto phi = db::darboux_transform(os::eigenfunction(state), cfg);
    INFO("n=" << n);
    CHECK(os::schrodinger_residual(phi, os::energy(state), v1, g) < 1e-7);
    CHECK(os::schrodinger_residual(phi, os::energy(state), v1_literal, g) > 1e-2);
  }
}

TEST_CASE("constant auxiliary gives no Crum shift") {
  const auto cfg = db::make_config(kBase, std::vector<ScalarField>{darboux_dirac::constant_field(1.0)},
                                   std::vector<double>{0.0});
  const auto delta = db::crum_shift(cfg);
  for (double x : {0.3, 1.0, 5.0}) CHECK(delta.value(x) == 0.0);
  // With u1 = 1 the transform is plain differentiation.
  const auto phi = db::darboux_transform(psi_n(0), cfg);
  CHECK(rel(phi.value(1.1), psi_n(0)(1.1, 1).derivative(1)) < 1e-14);
}

TEST_CASE("Crum shift of an exponential pair") {
  // W(e^{a x}, e^{b x}) = (b - a) e^{(a+b) x}; log W is linear so the shift is zero,
  // while the literal reading gives the constant 2 (a + b).
  const auto cfg = db::make_config(kBase, std::vector<ScalarField>{exp_field(0.5), exp_field(-1.5)},
                                   std::vector<double>{0.25, 2.25});
  CHECK(std::abs(db::crum_shift(cfg).value(0.7)) < 1e-12);
  CHECK(db::crum_shift(cfg, db::CrumReading::literal_first).value(0.7) == doctest::Approx(-2.0));
}

TEST_CASE("q1 is regular and satisfies the transformed Riccati equation") {
  const auto g = make_grid(0.1, 8.0, 400);
  const auto cfg = db::make_config(kBase, {-0.5});
  const auto q1 = db::transformed_q1(cfg);
  CHECK(rc::singularity_scan(db::transformed_seed(cfg), make_grid(0.1, 8.0, 1000)).empty());
  CHECK(rc::riccati_residual(q1, db::transformed_potential(cfg), g) < 1e-7);
  CHECK(rc::riccati_residual(q1, db::transformed_potential(cfg, db::CrumReading::literal_first), g) > 1e-2);

  // q1^2 + q1' = q0^2 + q0' - Delta directly, without going through V0.
  const auto q0 = rc::q_particular(rc::zero_energy_seed(kBase));
  const auto delta = db::crum_shift(cfg);
  for (double x : {0.3, 1.0, 3.0, 7.0}) {
    const auto a = q1(x, 1);
    const auto b = q0(x, 1);
    const double lhs = a.value() * a.value() + a.derivative(1);
    const double rhs = b.value() * b.value() + b.derivative(1) - delta.value(x);
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
  }
  // Same large-x slope as q0: q1 - q0 falls off like 1/x, so the slope gap
  // shrinks on [6, 10] and is below 1e-2 from x = 11 on.
  double prev = INFINITY;
  for (double x = 6.0; x <= 10.0; x += 0.5) {
    const double gap = std::abs(q1.value(x) - q0.value(x)) / x;
    CHECK(gap < prev);
    prev = gap;
  }
  for (double x : {11.0, 14.0, 20.0}) CHECK(std::abs(q1.value(x) - q0.value(x)) / x < 1e-2);
}

TEST_CASE("general-mode q1") {
  const auto g = make_grid(0.2, 8.0, 400);
  const auto cfg = db::make_config(kBase, {-0.5});
  // Admissible constants found by scanning the denominator.
  for (double c : {-1e3, 1e6}) {
    const rc::RiccatiFamily fam{db::transformed_seed(cfg), c, 1.0, rc::Mode::general};
    REQUIRE(rc::admissible(fam, g));
    const auto q1 = db::transformed_q1(cfg, rc::Mode::general, c);
    CHECK(rc::riccati_residual(q1, db::transformed_potential(cfg), g) < 1e-7);
  }
  CHECK_FALSE(rc::admissible({db::transformed_seed(cfg), 1e3, 1.0, rc::Mode::general}, g));
}

TEST_CASE("transformed spinors keep the original energies") {
  const auto g = make_grid(0.1, 8.0, 400);
  const auto cfg = db::make_config(kBase, {-0.5});
  const auto q1 = db::transformed_q1(cfg);
  const auto w = darboux_dirac::numerics::normalization_window(1.0);
  for (int n : {0, 1, 2}) {
    const auto state = os::with_index(kBase, n);
    for (int sign : {1, -1}) {
      const auto t = db::transformed_spinor(cfg, state, dr::dirac_energy(state, sign), dr::Kind::pseudoscalar, q1);
      INFO("n=" << n << " sign=" << sign);
      CHECK(dr::dirac_residual(t.spinor, t.potential, g) < 1e-7);
    }
    const auto t = db::transformed_spinor(cfg, state, dr::dirac_energy(state, 1), dr::Kind::pseudoscalar, q1);
    const auto unit = dr::normalize(t.spinor, 1.0);
    CHECK(std::abs(darboux_dirac::numerics::norm_squared(unit.psi1, unit.psi2, w.lo, w.hi) - 1.0) < 1e-8);
  }
  // Scalar partner at E = sqrt(eps).
  const auto t = db::transformed_spinor(cfg, kBase, std::sqrt(os::energy(kBase)), dr::Kind::scalar, q1);
  CHECK(dr::dirac_residual(t.spinor, t.potential, g) < 1e-7);
}

TEST_CASE("transformed ground state decays") {
  const auto g = make_grid(0.1, 8.0, 400);
  const auto cfg = db::make_config(kBase, {-0.5});
  const auto t = db::transformed_spinor(cfg, kBase, dr::dirac_energy(kBase, 1), dr::Kind::pseudoscalar);
  // The transform multiplies the tail by roughly x, so Phi2 is still at
  // 1.4e-4 of its peak at x = 8; both components are negligible by x = 12.
  double peak1 = 0.0, peak2 = 0.0;
  for (double x : g.points) {
    peak1 = std::max(peak1, std::abs(t.spinor.psi1.value(x)));
    peak2 = std::max(peak2, std::abs(t.spinor.psi2.value(x)));
  }
  CHECK(std::abs(t.spinor.psi1.value(8.0)) < 1e-4 * peak1);
  CHECK(std::abs(t.spinor.psi2.value(8.0)) < 2e-4 * peak2);
  CHECK(std::abs(t.spinor.psi1.value(12.0)) < 1e-10 * peak1);
  CHECK(std::abs(t.spinor.psi2.value(12.0)) < 1e-10 * peak2);
}

TEST_CASE("auxiliary energy equal to the state energy is rejected") {
  const auto cfg = db::make_config(kBase, {0.0});
  CHECK_THROWS_AS(db::transformed_spinor(cfg, kBase, dr::dirac_energy(kBase, 1), dr::Kind::pseudoscalar),
                  darboux_dirac::DomainError);
}

TEST_CASE("annihilation") {
  const auto g = make_grid(0.2, 8.0, 400);
  for (int n : {0, 1, 2}) {
    const auto cfg = db::make_config(kBase, {double(n)});
    const auto psi = psi_n(n);
    const auto phi = db::darboux_transform(psi, cfg);
    for (double x : g.points) {
      const auto pj = psi(x, 1);
      if (pj.value() == 0.0) continue;
      CHECK(std::abs(phi.value(x)) <= 1e-12 * std::max(std::abs(pj.value()), std::abs(pj.derivative(1))));
    }
  }
}

TEST_CASE("pole in the denominator is reported") {
  // psi_1 has a node, so transforming by it hits a vanishing Wronskian.
  const auto cfg = db::make_config(kBase, {1.0});
  CHECK_FALSE(rc::singularity_scan(cfg.aux_fields[0], make_grid(0.1, 8.0, 400)).empty());
  const ScalarField zero_at_root([](double x, int order) {
    return darboux_dirac::Jet::variable(x, order) - 1.0;
  });
  const auto cfg2 = db::make_config(kBase, std::vector<ScalarField>{zero_at_root}, std::vector<double>{0.0});
  CHECK_THROWS_AS(db::darboux_transform(psi_n(0), cfg2).value(1.0), darboux_dirac::PoleError);
}

TEST_CASE("second order equals two iterated first-order steps") {
  const auto g = make_grid(0.1, 8.0, 400);
  const auto cfg = db::make_config(os::ModelParams{1.0, 1, 1.0, 0.0}, {1.5, 1.25});
  CHECK(rc::singularity_scan(db::wronskian_field(cfg.aux_fields), make_grid(0.05, 10.0, 2000)).empty());
  for (int n : {0, 1, 2}) {
    const auto direct = db::darboux_transform(psi_n(n), cfg);
    const auto iter = db::darboux_iterated(psi_n(n), cfg.aux_fields);
    double peak = 0.0;
    for (double x : g.points) peak = std::max(peak, std::abs(direct.value(x)));
    INFO("n=" << n);
    CHECK(max_abs_diff(direct, iter, g) / peak < 1e-8);
  }
  const auto q1 = db::transformed_q1(cfg);
  for (double x : make_grid(0.1, 8.0, 1000).points) CHECK(std::isfinite(q1.value(x)));
  CHECK(rc::riccati_residual(q1, db::transformed_potential(cfg), g) < 1e-7);
}

TEST_CASE("third order partner") {
  const auto g = make_grid(0.2, 6.0, 200);
  const auto cfg = db::make_config(kBase, {-0.5, 1.5, 1.25});
  const auto v = db::transformed_potential(cfg);
  const auto state = os::with_index(kBase, 0);
  const auto phi = db::darboux_transform(os::eigenfunction(state), cfg);
  const auto iter = db::darboux_iterated(os::eigenfunction(state), cfg.aux_fields);
  REQUIRE(rc::singularity_scan(db::wronskian_field(cfg.aux_fields), g).empty());
  CHECK(os::schrodinger_residual(phi, os::energy(state), v, g) < 1e-7);
  double peak = 0.0;
  for (double x : g.points) peak = std::max(peak, std::abs(phi.value(x)));
  CHECK(max_abs_diff(phi, iter, g) / peak < 1e-8);
}

TEST_CASE("deformation grows as the auxiliary level approaches the ground state") {
  const auto window = make_grid(0.5, 6.0, 400);
  const auto q0 = rc::q_particular(rc::zero_energy_seed(kBase));
  double prev = 0.0;
  for (double n1 : {-0.5, -1.0 / 50.0, -1e-4}) {
    const double d = max_abs_diff(db::transformed_q1(db::make_config(kBase, {n1})), q0, window);
    INFO("n1=" << n1 << " d=" << d);
    CHECK(d > prev);
    prev = d;
  }
}

}  // TEST_SUITE
