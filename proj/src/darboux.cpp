#include "darboux_dirac/darboux.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "darboux_dirac/errors.hpp"

namespace darboux_dirac::darboux {

namespace {

constexpr int kMaxWronskianSize = kMaxOrder + 1;

using JetMatrix = std::array<std::array<Jet, kMaxWronskianSize>, kMaxWronskianSize>;

/// Determinant of the leading `size` rows restricted to `cols`, expanded
/// along row `row`.
Jet cofactor_det(const JetMatrix& m, int row, int size, const std::array<int, kMaxWronskianSize>& cols,
                 int ncols) {
  if (row == size - 1) return m[row][cols[0]];
  Jet det;
  bool first = true;
  for (int c = 0; c < ncols; ++c) {
    std::array<int, kMaxWronskianSize> rest{};
    int k = 0;
    for (int j = 0; j < ncols; ++j) {
      if (j != c) rest[k++] = cols[j];
    }
    Jet term = m[row][cols[c]] * cofactor_det(m, row + 1, size, rest, ncols - 1);
    if (c % 2 == 1) term = -term;
    if (first) {
      det = term;
      first = false;
    } else {
      det += term;
    }
  }
  return det;
}

Jet quotient_at(std::span<const ScalarField> aux, const ScalarField& psi, double x, int order) {
  std::vector<ScalarField> all(aux.begin(), aux.end());
  all.push_back(psi);
  const Jet num = wronskian(all, x, order);
  const Jet den = wronskian(aux, x, order);
  if (den.value() == 0.0 || !std::isfinite(den.value())) {
    throw PoleError("Darboux denominator Wronskian vanishes", x);
  }
  return num / den;
}

ScalarField first_order(const ScalarField& psi, const ScalarField& u1) {
  return ScalarField(
      [psi, u1](double x, int order) {
        const std::array<ScalarField, 1> aux{u1};
        return quotient_at(aux, psi, x, order);
      },
      "D[" + u1.name() + "]" + psi.name());
}

void check_energies(const std::vector<double>& energies) {
  for (std::size_t i = 0; i < energies.size(); ++i) {
    for (std::size_t j = i + 1; j < energies.size(); ++j) {
      if (energies[i] == energies[j]) {
        throw DomainError("auxiliary energies must be pairwise distinct");
      }
    }
  }
}

}  // namespace

DarbouxConfig make_config(const oscillator::ModelParams& p, std::vector<double> aux_indices) {
  oscillator::validate(p);
  const int order = static_cast<int>(aux_indices.size());
  if (order < 1 || order > kMaxOrder) {
    throw DomainError("Darboux order must be between 1 and " + std::to_string(kMaxOrder));
  }
  DarbouxConfig cfg;
  cfg.order = order;
  cfg.params = p;
  for (double n : aux_indices) {
    const auto aux = oscillator::with_index(p, n);
    cfg.aux_energies.push_back(oscillator::energy(aux));
    cfg.aux_fields.push_back(oscillator::eigenfunction(aux));
  }
  cfg.aux_indices = std::move(aux_indices);
  check_energies(cfg.aux_energies);
  return cfg;
}

DarbouxConfig make_config(const oscillator::ModelParams& p, std::vector<ScalarField> aux_fields,
                          std::vector<double> aux_energies) {
  oscillator::validate(p);
  const int order = static_cast<int>(aux_fields.size());
  if (order < 1 || order > kMaxOrder) {
    throw DomainError("Darboux order must be between 1 and " + std::to_string(kMaxOrder));
  }
  if (aux_energies.size() != aux_fields.size()) {
    throw DomainError("one energy per auxiliary field required");
  }
  check_energies(aux_energies);
  DarbouxConfig cfg;
  cfg.order = order;
  cfg.params = p;
  cfg.aux_fields = std::move(aux_fields);
  cfg.aux_energies = std::move(aux_energies);
  return cfg;
}

Jet wronskian(std::span<const ScalarField> fields, double x, int order) {
  const int size = static_cast<int>(fields.size());
  if (size < 1 || size > kMaxWronskianSize) {
    throw DomainError("Wronskian supports 1 to " + std::to_string(kMaxWronskianSize) +
                      " functions");
  }
  JetMatrix m;
  for (int i = 0; i < size; ++i) {
    Jet entry = fields[i](x, size - 1 + order);
    for (int row = 0; row < size; ++row) {
      m[row][i] = entry.truncated(order);
      if (row + 1 < size) entry = entry.differentiated();
    }
  }
  std::array<int, kMaxWronskianSize> cols{0, 1, 2, 3};
  return cofactor_det(m, 0, size, cols, size);
}

ScalarField wronskian_field(std::vector<ScalarField> fields) {
  return ScalarField(
      [fields = std::move(fields)](double x, int order) { return wronskian(fields, x, order); },
      "W");
}

ScalarField darboux_transform(const ScalarField& psi, const DarbouxConfig& cfg) {
  return ScalarField(
      [psi, aux = cfg.aux_fields](double x, int order) { return quotient_at(aux, psi, x, order); },
      "phi[" + psi.name() + "]");
}

ScalarField first_order_closed_form(const ScalarField& psi, const ScalarField& u1) {
  return ScalarField(
      [psi, u1](double x, int order) {
        const Jet u = u1(x, order + 1);
        const Jet p = psi(x, order + 1);
        if (u.value() == 0.0) throw PoleError("auxiliary solution vanishes", x);
        return -(u.differentiated() / u.truncated(order)) * p.truncated(order) +
               p.differentiated();
      },
      "phi1[" + psi.name() + "]");
}

ScalarField darboux_iterated(const ScalarField& psi, std::span<const ScalarField> aux) {
  if (aux.empty()) return psi;
  const ScalarField& u1 = aux.front();
  std::vector<ScalarField> moved;
  for (std::size_t i = 1; i < aux.size(); ++i) moved.push_back(first_order(aux[i], u1));
  return darboux_iterated(first_order(psi, u1), moved);
}

ScalarField crum_shift(const DarbouxConfig& cfg, CrumReading reading) {
  const ScalarField w = wronskian_field(cfg.aux_fields);
  if (reading == CrumReading::literal_first) {
    return ScalarField(
        [w](double x, int order) {
          const Jet j = w(x, order + 1);
          if (j.value() == 0.0) throw PoleError("Wronskian vanishes in Crum shift", x);
          return 2.0 * (j.differentiated() / j.truncated(order));
        },
        "crum_literal");
  }
  return ScalarField(
      [w](double x, int order) {
        const Jet j = w(x, order + 2);
        if (j.value() == 0.0) throw PoleError("Wronskian vanishes in Crum shift", x);
        const Jet dlog = j.differentiated() / j.truncated(order + 1);
        return 2.0 * dlog.differentiated();
      },
      "crum");
}

oscillator::Potential transformed_potential(const DarbouxConfig& cfg, CrumReading reading) {
  const ScalarField delta = crum_shift(cfg, reading);
  const oscillator::Potential v0 = oscillator::potential(cfg.params);
  return [delta, v0](double x) { return v0(x) - delta.value(x); };
}

ScalarField transformed_seed(const DarbouxConfig& cfg) {
  return darboux_transform(riccati::zero_energy_seed(cfg.params), cfg);
}

ScalarField transformed_q1(const DarbouxConfig& cfg, riccati::Mode mode, double c, double xref) {
  return riccati::q_general({transformed_seed(cfg), c, xref, mode});
}

TransformedDirac transformed_spinor(const DarbouxConfig& cfg, const oscillator::ModelParams& state,
                                    double energy, dirac::Kind kind, const ScalarField& q1) {
  const double eps = oscillator::energy(state);
  for (double lambda : cfg.aux_energies) {
    if (lambda == eps) {
      std::ostringstream os;
      os << "auxiliary energy " << lambda << " coincides with the state energy";
      throw DomainError(os.str());
    }
  }
  const ScalarField phi = darboux_transform(oscillator::eigenfunction(state), cfg);
  const ScalarField coeff =
      kind == dirac::Kind::pseudoscalar ? q1 : dirac::scalar_coefficient(q1, state.m);
  return {{kind, state.m, coeff}, dirac::spinor_from_schrodinger(phi, coeff, state.m, energy, kind)};
}

TransformedDirac transformed_spinor(const DarbouxConfig& cfg, const oscillator::ModelParams& state,
                                    double energy, dirac::Kind kind) {
  return transformed_spinor(cfg, state, energy, kind, transformed_q1(cfg));
}

}  // namespace darboux_dirac::darboux
