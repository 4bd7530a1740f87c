#pragma once

// Solutions q of the Riccati equation V = q^2 + q' built from a zero-energy
// solution qhat of qhat'' = V qhat.

#include <memory>
#include <vector>

#include "darboux_dirac/field.hpp"
#include "darboux_dirac/grid.hpp"
#include "darboux_dirac/oscillator.hpp"

namespace darboux_dirac::riccati {

enum class Mode { particular, general };

/// One member of the one-parameter family
///   q = qhat'/qhat + 1 / (c qhat^2 + qhat^2 I(x)),  I(x) = int_xref^x qhat^-2 dt.
/// In particular mode c and xref are ignored and q = qhat'/qhat.
struct RiccatiFamily {
  ScalarField qhat;
  double c = 0.0;
  double xref = 1.0;
  Mode mode = Mode::particular;
};

/// Index n at which the oscillator energy vanishes: -l/2 - 3/4.
double n_for_zero_energy(int l);

/// The oscillator solution at eps = 0.
ScalarField zero_energy_seed(const oscillator::ModelParams& p);

/// q = qhat'/qhat as a jet quotient. Throws PoleError where
/// |qhat| <= 1e-14 |qhat'|.
ScalarField q_particular(const ScalarField& qhat);

/// The denominator c qhat^2 + qhat^2 I(x) of the general member. Its zeros are
/// the poles of q_general.
ScalarField general_denominator(const RiccatiFamily& fam);

/// Dispatches on fam.mode. The accumulated integral I is cached per returned
/// field (a mutex guards the cache, so the field may be shared across
/// threads); its derivatives come from the closed-form integrand qhat^-2.
ScalarField q_general(const RiccatiFamily& fam);

/// max_i |q^2 + q' - V| / max(|V|, 1) over the grid points.
double riccati_residual(const ScalarField& q, const oscillator::Potential& v, const Grid& g);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Every adjacent grid pair across which f changes sign, touches
/// |f| < 1e-12, or cannot be evaluated. An empty result certifies f
/// nodeless at the grid resolution.
std::vector<Bracket> singularity_scan(const ScalarField& f, const Grid& g);

/// True when the family member has no pole on the grid.
bool admissible(const RiccatiFamily& fam, const Grid& g);

}  // namespace darboux_dirac::riccati
