#include "darboux_dirac/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/kernels.hpp"

namespace darboux_dirac::numerics {

namespace {

// Panels are never accepted above this depth, so the first coarse samples
// cannot hide a narrow peak.
constexpr int kMinQuadratureDepth = 3;

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
  int depth;
};

double checked(const RealFunction& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand not finite at x=" << x;
    throw DivergenceError(os.str());
  }
  return v;
}

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult integrate(const RealFunction& f, double a, double b, double abs_tol) {
  if (!(a < b)) throw DomainError("integrate requires a < b");
  if (!(abs_tol > 0.0)) throw DomainError("integrate requires a positive tolerance");
  const double span = b - a;

  QuadratureResult result;
  std::vector<Panel> stack;
  {
    const double fa = checked(f, a);
    const double fb = checked(f, b);
    const double fm = checked(f, 0.5 * (a + b));
    stack.push_back({a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), 0});
  }
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double flm = checked(f, 0.5 * (p.a + m));
    const double frm = checked(f, 0.5 * (m + p.b));
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double refined = left + right;
    const double err = std::abs(refined - p.whole) / 15.0;
    if (p.depth >= kMinQuadratureDepth && err <= abs_tol * (p.b - p.a) / span) {
      result.value += refined + (refined - p.whole) / 15.0;
      result.abs_error_estimate += err;
      ++result.panels;
      continue;
    }
    if (p.depth + 1 > kMaxQuadratureDepth) {
      std::ostringstream os;
      os.precision(17);
      os << "adaptive Simpson exceeded " << kMaxQuadratureDepth << " bisections on [" << p.a
         << ", " << p.b << "]";
      throw DivergenceError(os.str());
    }
    // Right half first so the left half is processed next (keeps summation
    // order left to right).
    stack.push_back({m, p.b, p.fm, frm, p.fb, right, p.depth + 1});
    stack.push_back({p.a, m, p.fa, flm, p.fm, left, p.depth + 1});
  }
  return result;
}

double simpson_uniform(const RealFunction& f, double a, double b, int panels) {
  if (!(a < b)) throw DomainError("simpson_uniform requires a < b");
  if (panels < 2 || panels % 2 != 0) {
    throw DomainError("simpson_uniform needs an even, positive panel count");
  }
  const double h = (b - a) / panels;
  std::vector<double> values(panels + 1);
  std::vector<double> weights(panels + 1);
  for (int i = 0; i <= panels; ++i) {
    values[i] = f(a + i * h);
    weights[i] = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
  }
  return kernels::dot(weights, values) * h / 3.0;
}

double fd_step(double x, int order) {
  // Second differences divide roundoff by h^2, so they need a wider step to
  // stay near 1e-9 relative accuracy.
  const double base = order == 1 ? 1e-5 : 1e-3;
  return std::max(base, base * std::abs(x));
}

double fd_derivative(const RealFunction& f, double x, int order) {
  const double h = fd_step(x, order);
  const double fp1 = f(x + h);
  const double fm1 = f(x - h);
  const double fp2 = f(x + 2.0 * h);
  const double fm2 = f(x - 2.0 * h);
  switch (order) {
    case 1:
      return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    case 2:
      return (-fm2 + 16.0 * fm1 - 30.0 * f(x) + 16.0 * fp1 - fp2) / (12.0 * h * h);
    default:
      throw DomainError("fd_derivative supports orders 1 and 2");
  }
}

Window normalization_window(double omega) {
  if (!(omega > 0.0)) throw DomainError("normalization window needs omega > 0");
  return {1e-6, 12.0 / std::sqrt(omega)};
}

double norm_squared(const ScalarField& f, double a, double b) {
  const RealFunction density = [&f](double x) {
    const double v = f.value(x);
    return v * v;
  };
  const double rough = simpson_uniform(density, a, b, 256);
  const double tol = std::max(1e-13 * std::abs(rough), 1e-300);
  return integrate(density, a, b, tol).value;
}

double norm_squared(const ScalarField& f, const ScalarField& g, double a, double b) {
  const RealFunction density = [&f, &g](double x) {
    const double u = f.value(x);
    const double v = g.value(x);
    return u * u + v * v;
  };
  const double rough = simpson_uniform(density, a, b, 256);
  const double tol = std::max(1e-13 * std::abs(rough), 1e-300);
  return integrate(density, a, b, tol).value;
}

ScalarField normalize(const ScalarField& f, double a, double b) {
  const double n2 = norm_squared(f, a, b);
  if (!(n2 > 0.0)) throw DomainError("cannot normalize a field of zero norm");
  return scaled(f, 1.0 / std::sqrt(n2));
}

std::pair<ScalarField, ScalarField> normalize(const ScalarField& f, const ScalarField& g,
                                              double a, double b) {
  const double n2 = norm_squared(f, g, a, b);
  if (!(n2 > 0.0)) throw DomainError("cannot normalize a field pair of zero norm");
  const double s = 1.0 / std::sqrt(n2);
  return {scaled(f, s), scaled(g, s)};
}

JetAudit jet_fd_audit(std::span<const ScalarField> fields, double lo, double hi, int samples,
                      std::uint64_t seed, double rel_tol) {
  if (fields.empty()) throw DomainError("jet audit needs at least one field");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pick_x(lo, hi);
  std::uniform_int_distribution<std::size_t> pick_field(0, fields.size() - 1);

  JetAudit audit;
  for (int s = 0; s < samples; ++s) {
    const ScalarField& f = fields[pick_field(rng)];
    const double x = pick_x(rng);
    const Jet jet = f(x, 2);
    const double scale = std::max(
        {std::abs(jet.derivative(0)), std::abs(jet.derivative(1)), std::abs(jet.derivative(2))});
    const RealFunction value = [&f](double t) { return f.value(t); };
    bool ok = true;
    for (int order = 1; order <= 2; ++order) {
      const double fd = fd_derivative(value, x, order);
      const double rel = std::abs(jet.derivative(order) - fd) / std::max(scale, 1e-300);
      if (!(rel <= rel_tol)) ok = false;
      if (!(rel <= audit.worst_relative_error)) {
        audit.worst_relative_error = rel;
        audit.worst_x = x;
        audit.worst_order = order;
        audit.worst_field = f.name();
      }
    }
    ++audit.samples;
    if (!ok) ++audit.failures;
  }
  return audit;
}

}  // namespace darboux_dirac::numerics
