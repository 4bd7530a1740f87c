#include "darboux_dirac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>

#include "darboux_dirac/dirac.hpp"
#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/kernels.hpp"
#include "darboux_dirac/numerics.hpp"
#include "darboux_dirac/riccati.hpp"
#include "darboux_dirac/specfun.hpp"

namespace darboux_dirac::verify {

namespace {

constexpr double kOracleTol = 1e-10;
constexpr double kIteratedTol = 1e-8;
constexpr double kNormTol = 1e-8;
constexpr double kControlFloor = 1e-2;
constexpr double kOrthoTol = 1e-6;
constexpr double kDecayTol = 1e-4;
constexpr double kAnnihilationTol = 1e-12;
constexpr double kAuditTol = 1e-6;
constexpr int kAuditSamples = 50;
constexpr std::uint64_t kAuditSeed = 20240917;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

class Suite {
 public:
  void expect_below(std::string name, double value, double tol, std::string note = {}) {
    add(std::move(name), value, tol, Expect::below, std::move(note));
  }
  void expect_above(std::string name, double value, double floor, std::string note = {}) {
    add(std::move(name), value, floor, Expect::above, std::move(note));
  }

  /// Runs `body`; a thrown error becomes a failed check under `name`.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      checks_.push_back({name, std::nan(""), 0.0, Expect::below, false, e.what()});
    }
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  void add(std::string name, double value, double tol, Expect e, std::string note) {
    const bool ok = e == Expect::below ? value < tol : value > tol;
    checks_.push_back({std::move(name), value, tol, e, ok && !std::isnan(value), std::move(note)});
  }

  std::vector<Check> checks_;
};

std::vector<double> values(const ScalarField& f, const Grid& g) {
  const auto jets = f.sample(g.points, 0);
  std::vector<double> v(jets.size());
  for (std::size_t i = 0; i < jets.size(); ++i) v[i] = jets[i].value();
  return v;
}

/// max_i |a_i - b_i| / max_j |b_j|.
double global_relative(const std::vector<double>& a, const std::vector<double>& b) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

double max_distance(const ScalarField& f, const ScalarField& g, const Grid& grid) {
  const auto a = values(f, grid);
  const auto b = values(g, grid);
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::string state_tag(double n) { return "[n=" + num(n) + "]"; }

void check_specfun(Suite& s) {
  s.guarded("specfun.laguerre_recurrence", [&] {
    // (nu+1) L_{nu+1} = (2 nu + alpha + 1 - x) L_nu - (nu + alpha) L_{nu-1}
    double worst = 0.0;
    for (double nu : {0.5, 1.0, 2.25, -0.5}) {
      for (double x : {0.1, 1.0, 4.0, 12.5}) {
        const double alpha = 1.5;
        const double lp = specfun::laguerre({nu + 1, alpha}, x, 0).value();
        const double l0 = specfun::laguerre({nu, alpha}, x, 0).value();
        const double lm = specfun::laguerre({nu - 1, alpha}, x, 0).value();
        const double lhs = (nu + 1) * lp;
        const double a = (2 * nu + alpha + 1 - x) * l0;
        const double b = (nu + alpha) * lm;
        const double scale = std::max({std::abs(lhs), std::abs(a), std::abs(b), 1e-300});
        worst = std::max(worst, std::abs(lhs - a + b) / scale);
      }
    }
    s.expect_below("specfun.laguerre_recurrence", worst, 1e-12);
  });
  s.guarded("specfun.kummer_ode", [&] {
    // x M'' + (b - x) M' - a M = 0
    double worst = 0.0;
    for (double a : {-1.75, -0.5, 0.25, 2.0}) {
      for (double x : {0.05, 0.8, 5.0, 30.0}) {
        const double b = 2.5;
        const Jet m = specfun::kummer_m(a, b, x, 2);
        const double t1 = x * m.derivative(2);
        const double t2 = (b - x) * m.derivative(1);
        const double t3 = a * m.value();
        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
        worst = std::max(worst, std::abs(t1 + t2 - t3) / scale);
      }
    }
    s.expect_below("specfun.kummer_ode", worst, 1e-11);
  });
  s.guarded("kernels.simd_equivalence", [&] {
    if (!kernels::backend_available(kernels::Backend::avx2)) {
      s.expect_below("kernels.simd_equivalence", 0.0, 1.0, "avx2 unavailable, scalar only");
      return;
    }
    const Grid g = make_grid(0.01, 40.0, 257);
    std::vector<double> scalar_out(g.points.size());
    std::vector<double> simd_out(g.points.size());
    double worst = 0.0;
    for (double a : {-2.25, -0.75, 0.5, 3.0}) {
      kernels::scalar::kummer_series(a, 1.5, g.points, scalar_out, {});
      kernels::avx2::kummer_series(a, 1.5, g.points, simd_out, {});
      for (std::size_t i = 0; i < g.points.size(); ++i) {
        const double scale = std::max(std::abs(scalar_out[i]), 1e-300);
        worst = std::max(worst, std::abs(scalar_out[i] - simd_out[i]) / scale);
      }
    }
    s.expect_below("kernels.simd_equivalence", worst, 1e-14);
  });
}

void check_oscillator(Suite& s, const Settings& cfg, const Grid& g) {
  for (double n : cfg.states) {
    const auto state = oscillator::with_index(cfg.params, n);
    const auto v0 = oscillator::potential(cfg.params);
    const double eps = oscillator::energy(state);
    s.guarded("oscillator.schrodinger" + state_tag(n), [&] {
      const ScalarField psi = oscillator::eigenfunction(state);
      s.expect_below("oscillator.schrodinger" + state_tag(n),
                     oscillator::schrodinger_residual(psi, eps, v0, g), cfg.tolerance);
      s.expect_above("control.wrong_energy" + state_tag(n),
                     oscillator::schrodinger_residual(psi, eps + 1.0, v0, g), kControlFloor,
                     "residual at eps+1 must not vanish");
      const double tail = numerics::normalization_window(cfg.params.omega).hi;
      const double peak = kernels::max_abs(values(psi, g));
      s.expect_below("oscillator.decay" + state_tag(n), std::abs(psi.value(tail)) / peak,
                     kDecayTol, "|psi(" + num(tail) + ")| / max|psi|");
    });
  }
  const auto window = numerics::normalization_window(cfg.params.omega);
  for (std::size_t i = 0; i < cfg.states.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.states.size(); ++j) {
      const std::string name = "oscillator.orthogonality[" + num(cfg.states[i]) + "," +
                               num(cfg.states[j]) + "]";
      s.guarded(name, [&] {
        const ScalarField a = oscillator::normalized_eigenfunction(
            oscillator::with_index(cfg.params, cfg.states[i]));
        const ScalarField b = oscillator::normalized_eigenfunction(
            oscillator::with_index(cfg.params, cfg.states[j]));
        const auto r = numerics::integrate([&](double x) { return a.value(x) * b.value(x); },
                                           window.lo, window.hi, 1e-12);
        s.expect_below(name, std::abs(r.value), kOrthoTol);
      });
    }
  }
}

void check_riccati(Suite& s, const Settings& cfg, const Grid& g, const ScalarField& seed,
                   const ScalarField& q0) {
  const auto v0 = oscillator::potential(cfg.params);
  s.guarded("riccati.seed_nodeless", [&] {
    const auto brackets = riccati::singularity_scan(seed, make_grid(0.05, 10.0, 2000));
    s.expect_below("riccati.seed_nodeless", static_cast<double>(brackets.size()), 0.5,
                   "sign changes of the zero-energy seed on (0.05, 10)");
  });
  s.guarded("riccati.q0_particular", [&] {
    s.expect_below("riccati.q0_particular", riccati::riccati_residual(q0, v0, g), cfg.tolerance);
    s.expect_above("control.q0_shifted",
                   riccati::riccati_residual(q0 + constant_field(0.1), v0, g), 1e-3,
                   "q0 + 0.1 must violate the Riccati equation");
  });
  s.guarded("riccati.q0_slope", [&] {
    // q0 / x increases toward omega / 2 on [6, 10].
    const double half = 0.5 * cfg.params.omega;
    double prev = -INFINITY;
    bool monotone = true;
    double last = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double x = 6.0 + 0.1 * i;
      last = q0.value(x) / x;
      monotone = monotone && last > prev;
      prev = last;
    }
    s.expect_below("riccati.q0_slope", std::abs(last - half), 1e-2,
                   monotone ? "q0(10)/10 vs omega/2, increasing on [6,10]"
                            : "q0/x not increasing on [6,10]");
    if (!monotone) s.expect_below("riccati.q0_slope_monotone", 1.0, 0.0);
  });

  std::vector<double> constants{-10.0, -1.0, 0.0, 1.0, 10.0, -1e3, 1e3};
  if (cfg.c_const) constants = {*cfg.c_const};
  int admissible = 0;
  for (double c : constants) {
    const std::string name = "riccati.general[c=" + num(c) + "]";
    s.guarded(name, [&] {
      const riccati::RiccatiFamily fam{seed, c, 1.0, riccati::Mode::general};
      if (!riccati::admissible(fam, g)) {
        if (cfg.c_const) s.expect_below(name, 1.0, 0.0, "c has a pole on the grid");
        return;
      }
      ++admissible;
      s.expect_below(name, riccati::riccati_residual(riccati::q_general(fam), v0, g),
                     cfg.tolerance);
    });
  }
  if (admissible == 0 && !cfg.c_const) {
    s.expect_below("riccati.general", 1.0, 0.0, "no admissible constant among the candidates");
  }
}

void check_dirac(Suite& s, const Settings& cfg, const Grid& g, const ScalarField& q0) {
  const double m = cfg.params.m;
  const dirac::DiracPotential pseudo{dirac::Kind::pseudoscalar, m, q0};
  for (double n : cfg.states) {
    const auto state = oscillator::with_index(cfg.params, n);
    const ScalarField psi = oscillator::eigenfunction(state);
    for (int sign : {1, -1}) {
      const std::string tag = state_tag(n) + (sign > 0 ? "[E+]" : "[E-]");
      s.guarded("dirac.pseudoscalar" + tag, [&] {
        const double e = dirac::dirac_energy(state, sign);
        const auto spinor =
            dirac::spinor_from_schrodinger(psi, q0, m, e, dirac::Kind::pseudoscalar);
        const auto rows = dirac::dirac_residual_rows(spinor, pseudo, g);
        s.expect_below("dirac.pseudoscalar.row1" + tag, rows.row1, cfg.tolerance);
        s.expect_below("dirac.pseudoscalar.row2" + tag, rows.row2, cfg.tolerance);
      });
    }
  }

  const double n0 = cfg.states.front();
  const auto ground = oscillator::with_index(cfg.params, n0);
  const double eps0 = oscillator::energy(ground);
  s.guarded("dirac.scalar" + state_tag(n0), [&] {
    const ScalarField f = dirac::scalar_coefficient(q0, m);
    const dirac::DiracPotential scalar{dirac::Kind::scalar, m, f};
    const auto spinor = dirac::spinor_from_schrodinger(oscillator::eigenfunction(ground), f, m,
                                                       std::sqrt(eps0), dirac::Kind::scalar);
    s.expect_below("dirac.scalar" + state_tag(n0), dirac::dirac_residual(spinor, scalar, g),
                   cfg.tolerance, "sigma_1 coefficient m + S = q0");
  });
  if (m > 0.0) {
    s.guarded("control.scalar_literal", [&] {
      const ScalarField f = dirac::scalar_coefficient(q0, m, dirac::ScalarReading::literal);
      const dirac::DiracPotential scalar{dirac::Kind::scalar, m, f};
      const auto spinor = dirac::spinor_from_schrodinger(oscillator::eigenfunction(ground), f, m,
                                                         std::sqrt(eps0), dirac::Kind::scalar);
      s.expect_above("control.scalar_literal", dirac::dirac_residual(spinor, scalar, g),
                     kControlFloor, "S = q0 + m taken literally must not solve the system");
    });
  }
  s.guarded("dirac.normalization" + state_tag(n0), [&] {
    const auto spinor =
        dirac::spinor_from_schrodinger(oscillator::eigenfunction(ground), q0, m,
                                       dirac::dirac_energy(ground, 1), dirac::Kind::pseudoscalar);
    const auto unit = dirac::normalize(spinor, cfg.params.omega);
    const auto w = numerics::normalization_window(cfg.params.omega);
    s.expect_below("dirac.normalization" + state_tag(n0),
                   std::abs(numerics::norm_squared(unit.psi1, unit.psi2, w.lo, w.hi) - 1.0),
                   kNormTol);
  });
}

/// max_i |a - b| / max(|a|, |u1'/u1 psi|, |psi'|) at each point.
double first_order_discrepancy(const ScalarField& quotient, const ScalarField& psi,
                               const ScalarField& u1, const Grid& g) {
  double worst = 0.0;
  const auto qj = quotient.sample(g.points, 0);
  const auto pj = psi.sample(g.points, 1);
  const auto uj = u1.sample(g.points, 1);
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const double dlog = uj[i].derivative(1) / uj[i].value();
    const double t1 = dlog * pj[i].value();
    const double t2 = pj[i].derivative(1);
    const double closed = -t1 + t2;
    const double scale = std::max({std::abs(closed), std::abs(t1), std::abs(t2), 1e-300});
    worst = std::max(worst, std::abs(qj[i].value() - closed) / scale);
  }
  return worst;
}

void check_darboux(Suite& s, const Settings& cfg, const Grid& g, const Grid& work,
                   const ScalarField& q0) {
  const double n1 = cfg.aux.front();
  const std::string aux_tag = "[aux=" + num(n1) + "]";
  darboux::DarbouxConfig dc;
  try {
    dc = darboux::make_config(cfg.params, {n1});
  } catch (const std::exception& e) {
    const std::string what = e.what();
    s.guarded("darboux.config" + aux_tag, [&] { throw DomainError(what); });
    return;
  }
  const ScalarField u1 = dc.aux_fields.front();

  s.guarded("darboux.aux_nodeless" + aux_tag, [&] {
    s.expect_below("darboux.aux_nodeless" + aux_tag,
                   static_cast<double>(riccati::singularity_scan(u1, work).size()), 0.5);
  });

  for (double n : cfg.states) {
    const std::string tag = state_tag(n) + aux_tag;
    s.guarded("darboux.first_order_oracle" + tag, [&] {
      const ScalarField psi = oscillator::eigenfunction(oscillator::with_index(cfg.params, n));
      s.expect_below("darboux.first_order_oracle" + tag,
                     first_order_discrepancy(darboux::darboux_transform(psi, dc), psi, u1, g),
                     kOracleTol, "Wronskian quotient vs -(u1'/u1) psi + psi'");
    });
  }

  const auto v1 = darboux::transformed_potential(dc, cfg.crum);
  const auto v1_literal = darboux::transformed_potential(dc, darboux::CrumReading::literal_first);
  const char* reading = cfg.crum == darboux::CrumReading::second_log_derivative
                            ? "Crum shift 2 (log W)''"
                            : "Crum shift 2 (log W)' (literal reading)";
  for (double n : cfg.states) {
    const auto state = oscillator::with_index(cfg.params, n);
    const std::string tag = state_tag(n) + aux_tag;
    s.guarded("darboux.partner_schrodinger" + tag, [&] {
      const ScalarField phi = darboux::darboux_transform(oscillator::eigenfunction(state), dc);
      const double eps = oscillator::energy(state);
      s.expect_below("darboux.partner_schrodinger" + tag,
                     oscillator::schrodinger_residual(phi, eps, v1, work), cfg.tolerance, reading);
      if (n == cfg.states.front()) {
        s.expect_above("control.crum_literal" + tag,
                       oscillator::schrodinger_residual(phi, eps, v1_literal, work),
                       kControlFloor, "first log-derivative Crum shift must not give a partner");
      }
    });
  }

  ScalarField q1;
  s.guarded("darboux.q1" + aux_tag, [&] {
    q1 = darboux::transformed_q1(dc);
    const auto grid = make_grid(0.1, 8.0, 1000);
    const auto brackets = riccati::singularity_scan(darboux::transformed_seed(dc), grid);
    s.expect_below("darboux.q1_finite" + aux_tag, static_cast<double>(brackets.size()), 0.5,
                   "poles of q1 on (0.1, 8)");
    s.expect_below("darboux.q1_riccati" + aux_tag, riccati::riccati_residual(q1, v1, work),
                   cfg.tolerance, reading);
  });
  if (!q1) return;

  for (double n : cfg.states) {
    const auto state = oscillator::with_index(cfg.params, n);
    const std::string tag = state_tag(n) + aux_tag;
    s.guarded("darboux.partner_dirac" + tag, [&] {
      const double e = dirac::dirac_energy(state, 1);
      const auto t = darboux::transformed_spinor(dc, state, e, dirac::Kind::pseudoscalar, q1);
      s.expect_below("darboux.partner_dirac" + tag, dirac::dirac_residual(t.spinor, t.potential, work),
                     cfg.tolerance, "at the unshifted energy +|E_n|");
      if (n == cfg.states.front()) {
        const auto unit = dirac::normalize(t.spinor, cfg.params.omega);
        const auto w = numerics::normalization_window(cfg.params.omega);
        s.expect_below("darboux.partner_normalization" + tag,
                       std::abs(numerics::norm_squared(unit.psi1, unit.psi2, w.lo, w.hi) - 1.0),
                       kNormTol);
      }
    });
  }

  s.guarded("darboux.annihilation", [&] {
    const auto ground = oscillator::with_index(cfg.params, cfg.states.front());
    const ScalarField psi = oscillator::eigenfunction(ground);
    const auto self = darboux::make_config(cfg.params, std::vector<ScalarField>{psi},
                                           std::vector<double>{oscillator::energy(ground)});
    const auto phi = darboux::darboux_transform(psi, self).sample(g.points, 0);
    const auto pj = psi.sample(g.points, 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
      const double scale = std::max({std::abs(pj[i].value()), std::abs(pj[i].derivative(1)), 1e-300});
      worst = std::max(worst, std::abs(phi[i].value()) / scale);
    }
    s.expect_below("darboux.annihilation", worst, kAnnihilationTol, "transform of psi by itself");
  });

  s.guarded("darboux.deformation_monotone", [&] {
    const Grid window = make_grid(0.5, 6.0, 400);
    std::string note;
    double prev = -1.0;
    bool increasing = true;
    for (double aux : {-0.5, -1.0 / 50.0, -1e-4}) {
      const double d = max_distance(darboux::transformed_q1(darboux::make_config(cfg.params, {aux})),
                                    q0, window);
      note += (note.empty() ? "" : " < ") + num(d);
      increasing = increasing && d > prev;
      prev = d;
    }
    s.expect_below("darboux.deformation_monotone", increasing ? 0.0 : 1.0, 0.5,
                   "max|q1 - q0| on [0.5,6]: " + note);
  });
}

void check_second_order(Suite& s, const Settings& cfg, const Grid& work) {
  const std::vector<double> pair{1.5, 1.25};
  s.guarded("darboux.second_order", [&] {
    const auto dc = darboux::make_config(cfg.params, pair);
    double worst = 0.0;
    for (double n : cfg.states) {
      const ScalarField psi = oscillator::eigenfunction(oscillator::with_index(cfg.params, n));
      const auto direct = values(darboux::darboux_transform(psi, dc), work);
      const auto iterated = values(darboux::darboux_iterated(psi, dc.aux_fields), work);
      worst = std::max(worst, global_relative(iterated, direct));
    }
    s.expect_below("darboux.second_order_iterated", worst, kIteratedTol,
                   "aux 1.5, 1.25: direct quotient vs two first-order steps");
    const auto grid = make_grid(0.1, 8.0, 1000);
    const auto brackets = riccati::singularity_scan(darboux::transformed_seed(dc), grid);
    const auto q1 = values(darboux::transformed_q1(dc), grid);
    const bool finite = std::all_of(q1.begin(), q1.end(), [](double v) { return std::isfinite(v); });
    s.expect_below("darboux.second_order_q1_finite", static_cast<double>(brackets.size()) + (finite ? 0 : 1),
                   0.5, "poles of q1 on (0.1, 8)");
  });
}

void check_numerics(Suite& s, const Settings& cfg, const ScalarField& seed, const ScalarField& q0) {
  s.guarded("numerics.jet_audit", [&] {
    std::vector<ScalarField> fields{seed, q0};
    for (double n : cfg.states) {
      fields.push_back(oscillator::eigenfunction(oscillator::with_index(cfg.params, n)));
    }
    const auto dc = darboux::make_config(cfg.params, cfg.aux);
    fields.push_back(dc.aux_fields.front());
    fields.push_back(darboux::darboux_transform(fields[2], dc));
    fields.push_back(darboux::transformed_q1(dc));
    const auto audit =
        numerics::jet_fd_audit(fields, 0.5, 6.0, kAuditSamples, kAuditSeed, kAuditTol);
    s.expect_below("numerics.jet_audit", audit.worst_relative_error, kAuditTol,
                   std::to_string(audit.samples) + " samples, worst at " + audit.worst_field +
                       " x=" + num(audit.worst_x) + " order " + std::to_string(audit.worst_order));
  });
  s.guarded("numerics.quadrature_oracle", [&] {
    const ScalarField psi =
        oscillator::eigenfunction(oscillator::with_index(cfg.params, cfg.states.front()));
    const auto w = numerics::normalization_window(cfg.params.omega);
    const auto sq = [&](double x) {
      const double v = psi.value(x);
      return v * v;
    };
    const double adaptive = numerics::integrate(sq, w.lo, w.hi, 1e-13).value;
    const double fixed = numerics::simpson_uniform(sq, w.lo, w.hi, 4000);
    s.expect_below("numerics.quadrature_oracle", std::abs(adaptive - fixed) / std::abs(fixed),
                   kNormTol, "adaptive vs uniform Simpson");
  });
}

}  // namespace

std::vector<Check> run_suite(const Settings& cfg) {
  Suite s;
  const Grid g = make_grid(0.2, 8.0, 400);
  const Grid work = make_grid(0.1, 8.0, 400);
  if (cfg.states.empty() || cfg.aux.empty()) {
    s.expect_below("settings", 1.0, 0.0, "at least one state and one auxiliary index required");
    return s.take();
  }

  ScalarField seed;
  ScalarField q0;
  s.guarded("riccati.seed", [&] {
    seed = riccati::zero_energy_seed(cfg.params);
    q0 = riccati::q_particular(seed);
    q0.sample(g.points, 1);
  });

  check_specfun(s);
  check_oscillator(s, cfg, g);
  if (q0) {
    check_riccati(s, cfg, g, seed, q0);
    check_dirac(s, cfg, g, q0);
    check_darboux(s, cfg, g, work, q0);
    check_numerics(s, cfg, seed, q0);
  }
  check_second_order(s, cfg, work);
  return s.take();
}

bool print_report(const std::vector<Check>& checks, std::ostream& os) {
  int failed = 0;
  for (const auto& c : checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-48s %12.3e %s %.1e", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.value, c.expect == Expect::below ? "<" : ">", c.tolerance);
    os << line;
    if (!c.note.empty()) os << "  (" << c.note << ')';
    os << '\n';
    if (!c.passed) ++failed;
  }
  os << (failed == 0 ? "all " : "") << checks.size() - failed << '/' << checks.size()
     << " checks passed\n";
  if (failed > 0) {
    os << "failed:";
    for (const auto& c : checks) {
      if (!c.passed) os << ' ' << c.name;
    }
    os << '\n';
  }
  return failed == 0;
}

}  // namespace darboux_dirac::verify
