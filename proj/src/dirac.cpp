#include "darboux_dirac/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/kernels.hpp"
#include "darboux_dirac/numerics.hpp"

namespace darboux_dirac::dirac {

double dirac_energy(const oscillator::ModelParams& p, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("energy sign must be +1 or -1");
  const double radicand = p.m * p.m + oscillator::energy(p);
  if (radicand < 0.0) throw DomainError("negative radicand m^2 + eps");
  return sign * std::sqrt(radicand);
}

Spinor spinor_from_schrodinger(const ScalarField& psi, const ScalarField& q, double mass,
                               double energy, Kind kind) {
  const double denom = kind == Kind::pseudoscalar ? energy + mass : energy;
  if (denom == 0.0) {
    throw DomainError(kind == Kind::pseudoscalar ? "E + m = 0 in the pseudoscalar map"
                                                 : "E = 0 in the scalar map");
  }
  ScalarField lower(
      [psi, q, denom](double x, int order) {
        const Jet p = psi(x, order + 1);
        return (q(x, order) * p.truncated(order) - p.differentiated()) / denom;
      },
      "Psi2");
  return {psi, lower, energy};
}

DiracResidual dirac_residual_rows(const Spinor& s, const DiracPotential& u, const Grid& g) {
  const auto upper = s.psi1.sample(g.points, 1);
  const auto lower = s.psi2.sample(g.points, 1);
  const auto coeff = u.q.sample(g.points, 0);
  const double mass = u.kind == Kind::pseudoscalar ? u.mass : 0.0;
  const double e = s.energy;

  const std::size_t n = g.points.size();
  std::vector<double> row1(n), row2(n), terms(6 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p1 = upper[i].derivative(0);
    const double dp1 = upper[i].derivative(1);
    const double p2 = lower[i].derivative(0);
    const double dp2 = lower[i].derivative(1);
    const double q = coeff[i].value();
    row1[i] = dp2 + (mass - e) * p1 + q * p2;
    row2[i] = -dp1 + q * p1 - (mass + e) * p2;
    terms[6 * i + 0] = dp2;
    terms[6 * i + 1] = (mass - e) * p1;
    terms[6 * i + 2] = q * p2;
    terms[6 * i + 3] = dp1;
    terms[6 * i + 4] = q * p1;
    terms[6 * i + 5] = (mass + e) * p2;
  }
  const double scale = std::max(kernels::max_abs(terms), 1e-300);
  return {kernels::max_abs(row1) / scale, kernels::max_abs(row2) / scale};
}

double dirac_residual(const Spinor& s, const DiracPotential& u, const Grid& g) {
  return dirac_residual_rows(s, u, g).max();
}

ScalarField scalar_coefficient(const ScalarField& q, double mass, ScalarReading reading) {
  if (reading == ScalarReading::riccati) return q;
  return ScalarField(
      [q, mass](double x, int order) { return q(x, order) + 2.0 * mass; }, "m+S(literal)");
}

double density(const Spinor& s, double x) {
  const double a = s.psi1.value(x);
  const double b = s.psi2.value(x);
  return a * a + b * b;
}

Spinor normalize(const Spinor& s, double omega) {
  const auto w = numerics::normalization_window(omega);
  auto [upper, lower] = numerics::normalize(s.psi1, s.psi2, w.lo, w.hi);
  return {upper, lower, s.energy};
}

}  // namespace darboux_dirac::dirac
