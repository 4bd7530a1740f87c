#pragma once

// The rationally extended radial oscillator
//   V0(x) = w^2 x^2 / 4 + l(l+1)/x^2 + 4w/(w x^2 + 2l + 1) - 8w(2l+1)/(w x^2 + 2l + 1)^2
// with bound states built from X1 exceptional Laguerre polynomials.

#include <functional>

#include "darboux_dirac/field.hpp"
#include "darboux_dirac/grid.hpp"

namespace darboux_dirac::oscillator {

struct ModelParams {
  double omega = 1.0;  // oscillator frequency, > 0
  int l = 0;           // angular momentum, >= 0
  double m = 0.0;      // Dirac mass, >= 0
  double n = 0.0;      // state index; real values give non-normalizable solutions
};

/// Throws DomainError if omega <= 0, l < 0 or m < 0.
void validate(const ModelParams& p);

/// p with the state index replaced.
ModelParams with_index(ModelParams p, double n);

using Potential = std::function<double(double)>;

double potential_v0(const ModelParams& p, double x);
/// V0 bound to p, for the residual checks.
Potential potential(const ModelParams& p);

/// eps_n = omega (2n + l + 3/2), for real n.
double energy(const ModelParams& p);

/// psi_n(x) = x^(l+1) / (w x^2 + 2l + 1) * exp(-w x^2 / 4) * calL_{n+1}^{l+1/2}(w x^2 / 2),
/// unnormalized. The field carries a batch evaluator that sweeps the Laguerre
/// series over whole grids.
ScalarField eigenfunction(const ModelParams& p);

/// eigenfunction(p) scaled to unit L2 norm over the normalization window.
ScalarField normalized_eigenfunction(const ModelParams& p);

/// max_i |f'' + (eps - V) f| / max(max_i |f''|, max_i |eps f|, 1e-300) over
/// the grid points.
double schrodinger_residual(const ScalarField& f, double epsilon, const Potential& v,
                            const Grid& g);

}  // namespace darboux_dirac::oscillator
