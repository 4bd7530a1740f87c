#include "darboux_dirac/riccati.hpp"

#include <cmath>
#include <iterator>
#include <map>
#include <mutex>
#include <sstream>

#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/kernels.hpp"
#include "darboux_dirac/numerics.hpp"

namespace darboux_dirac::riccati {

namespace {

constexpr double kPoleRatio = 1e-14;
constexpr double kQuadratureTol = 1e-12;

/// Running values of I(x) = int_xref^x qhat^-2 dt at previously visited
/// abscissae. New points integrate from the nearest known knot.
class AccumulatedIntegral {
 public:
  AccumulatedIntegral(ScalarField qhat, double xref) : qhat_(std::move(qhat)) {
    knots_.emplace(xref, 0.0);
  }

  double operator()(double x) {
    std::lock_guard lock(mu_);
    auto hit = knots_.find(x);
    if (hit != knots_.end()) return hit->second;

    auto above = knots_.lower_bound(x);
    auto nearest = above;
    if (above == knots_.end()) {
      nearest = std::prev(above);
    } else if (above != knots_.begin()) {
      auto below = std::prev(above);
      if (x - below->first < above->first - x) nearest = below;
    }
    const double from = nearest->first;
    const numerics::RealFunction integrand = [this](double t) {
      const double q = qhat_.value(t);
      return 1.0 / (q * q);
    };
    const double lo = std::min(from, x);
    const double hi = std::max(from, x);
    // Constant offsets in I only reparametrize c, so the tolerance is taken
    // relative to the size of the piece once that exceeds one.
    const double rough = numerics::simpson_uniform(integrand, lo, hi, 16);
    const double tol = kQuadratureTol * std::max(1.0, std::abs(rough));
    const double piece = numerics::integrate(integrand, lo, hi, tol).value;
    const double value = nearest->second + (x > from ? piece : -piece);
    knots_.emplace(x, value);
    return value;
  }

 private:
  ScalarField qhat_;
  std::mutex mu_;
  std::map<double, double> knots_;
};

/// Jet of I at x, order `order`, from the cached value and the jet of qhat^-2.
Jet integral_jet(AccumulatedIntegral& integral, const ScalarField& qhat, double x, int order) {
  const double value = integral(x);
  if (order == 0) return Jet::constant(x, value, 0);
  const Jet q = qhat(x, order - 1);
  return (1.0 / (q * q)).integrated(value);
}

}  // namespace

double n_for_zero_energy(int l) { return -0.5 * l - 0.75; }

ScalarField zero_energy_seed(const oscillator::ModelParams& p) {
  return oscillator::eigenfunction(oscillator::with_index(p, n_for_zero_energy(p.l)));
}

ScalarField q_particular(const ScalarField& qhat) {
  return ScalarField(
      [qhat](double x, int order) {
        const Jet j = qhat(x, order + 1);
        const double v = j.value();
        if (v == 0.0 || std::abs(v) <= kPoleRatio * std::abs(j.derivative(1))) {
          throw PoleError("log-derivative of a vanishing seed", x);
        }
        return j.differentiated() / j.truncated(order);
      },
      "dlog(" + qhat.name() + ")");
}

ScalarField general_denominator(const RiccatiFamily& fam) {
  auto integral = std::make_shared<AccumulatedIntegral>(fam.qhat, fam.xref);
  const ScalarField qhat = fam.qhat;
  const double c = fam.c;
  return ScalarField(
      [integral, qhat, c](double x, int order) {
        const Jet q = qhat(x, order);
        return q * q * (integral_jet(*integral, qhat, x, order) + c);
      },
      "denominator");
}

ScalarField q_general(const RiccatiFamily& fam) {
  if (fam.mode == Mode::particular) return q_particular(fam.qhat);
  if (!(fam.xref > 0.0)) throw DomainError("xref must be positive");
  auto integral = std::make_shared<AccumulatedIntegral>(fam.qhat, fam.xref);
  const ScalarField qhat = fam.qhat;
  const double c = fam.c;
  std::ostringstream name;
  name << "q[c=" << c << "]";
  return ScalarField(
      [integral, qhat, c](double x, int order) {
        const Jet q = qhat(x, order + 1);
        const Jet shifted = integral_jet(*integral, qhat, x, order) + c;
        const double s = shifted.value();
        if (q.value() == 0.0 || s == 0.0 ||
            std::abs(s) <= kPoleRatio * std::abs(c) + 1e-300) {
          throw PoleError("general Riccati denominator vanishes", x);
        }
        const Jet q0 = q.truncated(order);
        return q.differentiated() / q0 + 1.0 / (q0 * q0 * shifted);
      },
      name.str());
}

double riccati_residual(const ScalarField& q, const oscillator::Potential& v, const Grid& g) {
  const auto jets = q.sample(g.points, 1);
  std::vector<double> r(jets.size());
  for (std::size_t i = 0; i < jets.size(); ++i) {
    const double vx = v(g.points[i]);
    const double q0 = jets[i].derivative(0);
    r[i] = (q0 * q0 + jets[i].derivative(1) - vx) / std::max(std::abs(vx), 1.0);
  }
  return kernels::max_abs(r);
}

std::vector<Bracket> singularity_scan(const ScalarField& f, const Grid& g) {
  const std::size_t n = g.points.size();
  std::vector<double> v(n);
  std::vector<bool> bad(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      v[i] = f.value(g.points[i]);
      bad[i] = !std::isfinite(v[i]) || std::abs(v[i]) < 1e-12;
    } catch (const std::exception&) {
      bad[i] = true;
    }
  }
  std::vector<Bracket> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool flagged = bad[i] || bad[i + 1] || (v[i] < 0.0) != (v[i + 1] < 0.0);
    if (!flagged) continue;
    if (!out.empty() && out.back().hi == g.points[i]) {
      out.back().hi = g.points[i + 1];
    } else {
      out.push_back({g.points[i], g.points[i + 1]});
    }
  }
  return out;
}

bool admissible(const RiccatiFamily& fam, const Grid& g) {
  if (fam.mode == Mode::particular) return singularity_scan(fam.qhat, g).empty();
  return singularity_scan(fam.qhat, g).empty() &&
         singularity_scan(general_denominator(fam), g).empty();
}

}  // namespace darboux_dirac::riccati
