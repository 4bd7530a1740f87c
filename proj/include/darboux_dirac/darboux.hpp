#pragma once

// N-th order Darboux transformations of the oscillator model through
// Wronskian quotients, and the induced Dirac partners.

#include <span>
#include <vector>

#include "darboux_dirac/dirac.hpp"
#include "darboux_dirac/field.hpp"
#include "darboux_dirac/oscillator.hpp"
#include "darboux_dirac/riccati.hpp"

namespace darboux_dirac::darboux {

/// Largest supported transformation order.
inline constexpr int kMaxOrder = 3;

struct DarbouxConfig {
  int order = 0;
  /// State indices of the auxiliary solutions; empty when the config was
  /// built from explicit fields.
  std::vector<double> aux_indices;
  /// lambda_i = omega (2 n_i + l + 3/2), pairwise distinct.
  std::vector<double> aux_energies;
  oscillator::ModelParams params;
  std::vector<ScalarField> aux_fields;
};

/// Auxiliary solutions u_i = psi at n = aux_indices[i]. Throws DomainError
/// unless 1 <= N <= 3 and the energies are pairwise distinct.
DarbouxConfig make_config(const oscillator::ModelParams& p, std::vector<double> aux_indices);

/// Config from arbitrary auxiliary fields with their energies (used for
/// synthetic checks such as a constant auxiliary).
DarbouxConfig make_config(const oscillator::ModelParams& p, std::vector<ScalarField> aux_fields,
                          std::vector<double> aux_energies);

/// Jet of W[f_1, ..., f_k](x) of the requested order. The determinant of the
/// derivative matrix is expanded by cofactors in jet arithmetic, so the jet
/// entries are the exact derivatives of the determinant. k <= 4.
Jet wronskian(std::span<const ScalarField> fields, double x, int order = 2);
ScalarField wronskian_field(std::vector<ScalarField> fields);

/// phi = W[u_1..u_N, psi] / W[u_1..u_N]. Throws PoleError where the
/// denominator vanishes.
ScalarField darboux_transform(const ScalarField& psi, const DarbouxConfig& cfg);

/// -(u1'/u1) psi + psi', the explicit first-order transform.
ScalarField first_order_closed_form(const ScalarField& psi, const ScalarField& u1);

/// Chain of first-order transforms: psi is moved by u_1, the remaining
/// auxiliaries are moved along with it, and so on. Equals the direct N-th
/// order quotient.
ScalarField darboux_iterated(const ScalarField& psi, std::span<const ScalarField> aux);

enum class CrumReading {
  /// Delta = 2 (log W)'' ; the transformed potential is V0 - Delta.
  second_log_derivative,
  /// Delta = 2 (log W)'. Does not produce a partner potential; kept as a
  /// negative control.
  literal_first,
};

ScalarField crum_shift(const DarbouxConfig& cfg,
                       CrumReading reading = CrumReading::second_log_derivative);

/// V0 - Delta.
oscillator::Potential transformed_potential(
    const DarbouxConfig& cfg, CrumReading reading = CrumReading::second_log_derivative);

/// phi at eps = 0, the seed of the transformed Riccati solution.
ScalarField transformed_seed(const DarbouxConfig& cfg);

/// q1 from the transformed zero-energy solution: its log-derivative in
/// particular mode, the riccati family member (c, xref) in general mode.
ScalarField transformed_q1(const DarbouxConfig& cfg, riccati::Mode mode = riccati::Mode::particular,
                           double c = 0.0, double xref = 1.0);

struct TransformedDirac {
  dirac::DiracPotential potential;
  dirac::Spinor spinor;
};

/// Phi1 = darboux_transform(psi_n), Phi2 by the kind-specific map with q1 in
/// place of q0, paired with U1 = m sigma_3 + q1 sigma_1 (pseudoscalar) or
/// U1 = q1 sigma_1 (scalar). `state` selects n. Throws DomainError if some
/// lambda_i coincides with eps_n.
TransformedDirac transformed_spinor(const DarbouxConfig& cfg, const oscillator::ModelParams& state,
                                    double energy, dirac::Kind kind, const ScalarField& q1);
TransformedDirac transformed_spinor(const DarbouxConfig& cfg, const oscillator::ModelParams& state,
                                    double energy, dirac::Kind kind);

}  // namespace darboux_dirac::darboux
