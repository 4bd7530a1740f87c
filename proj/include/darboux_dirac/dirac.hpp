#pragma once

// One-dimensional Dirac equation  i sigma_2 Psi' + (U - E) Psi = 0  with
// i sigma_2 = [[0, 1], [-1, 0]] and
//   pseudoscalar  U = m sigma_3 + q(x) sigma_1,
//   scalar        U = f(x) sigma_1   (f = m + S, the full sigma_1 coefficient).

#include "darboux_dirac/field.hpp"
#include "darboux_dirac/grid.hpp"
#include "darboux_dirac/oscillator.hpp"

namespace darboux_dirac::dirac {

enum class Kind { pseudoscalar, scalar };

struct DiracPotential {
  Kind kind = Kind::pseudoscalar;
  double mass = 0.0;
  /// q for the pseudoscalar kind, the sigma_1 coefficient f for the scalar kind.
  ScalarField q;
};

struct Spinor {
  ScalarField psi1;
  ScalarField psi2;
  double energy = 0.0;
};

/// sign * sqrt(m^2 + omega (2n + l + 3/2)); sign must be +1 or -1.
double dirac_energy(const oscillator::ModelParams& p, int sign);

/// Psi1 = psi and
///   pseudoscalar  Psi2 = (q Psi1 - Psi1') / (E + m),
///   scalar        Psi2 = (f Psi1 - Psi1') / E,   f = q.
/// Throws DomainError when the denominator is zero.
Spinor spinor_from_schrodinger(const ScalarField& psi, const ScalarField& q, double mass,
                               double energy, Kind kind);

struct DiracResidual {
  double row1 = 0.0;
  double row2 = 0.0;
  double max() const { return row1 > row2 ? row1 : row2; }
};

/// Both rows of the Dirac system over the grid,
///   row 1: Psi2' + (m - E) Psi1 + q Psi2
///   row 2: -Psi1' + q Psi1 - (m + E) Psi2
/// (m = 0 terms dropped for the scalar kind), each relative to the largest
/// magnitude of any individual term over the grid.
DiracResidual dirac_residual_rows(const Spinor& s, const DiracPotential& u, const Grid& g);
double dirac_residual(const Spinor& s, const DiracPotential& u, const Grid& g);

/// How S relates to the Riccati solution q.
enum class ScalarReading {
  /// The sigma_1 coefficient m + S equals q, i.e. S = q - m.
  riccati,
  /// S = q + m taken literally, so the coefficient is q + 2m. Kept only as a
  /// negative control; it does not decouple to the Riccati equation.
  literal,
};

/// The sigma_1 coefficient m + S of the scalar potential built from q.
ScalarField scalar_coefficient(const ScalarField& q, double mass,
                               ScalarReading reading = ScalarReading::riccati);

/// |Psi1|^2 + |Psi2|^2 at x.
double density(const Spinor& s, double x);

/// Spinor scaled so that its density integrates to one over the
/// normalization window for this omega.
Spinor normalize(const Spinor& s, double omega);

}  // namespace darboux_dirac::dirac
