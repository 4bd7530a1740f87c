#include "darboux_dirac/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/kernels.hpp"
#include "darboux_dirac/numerics.hpp"
#include "darboux_dirac/specfun.hpp"

namespace darboux_dirac {

Grid make_grid(double xmin, double xmax, int count) {
  if (!(xmin > 0.0) || !(xmin < xmax) || !std::isfinite(xmax)) {
    throw DomainError("grid needs 0 < xmin < xmax");
  }
  if (count < 2) throw DomainError("grid needs at least two points");
  Grid g{xmin, xmax, count, {}};
  g.points.resize(count);
  const double h = (xmax - xmin) / (count - 1);
  for (int i = 0; i < count; ++i) g.points[i] = xmin + i * h;
  g.points.back() = xmax;
  return g;
}

Grid parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos ||
      text.find(':', c2 + 1) != std::string::npos) {
    throw DomainError("grid must look like a:b:count, got '" + text + "'");
  }
  const std::string sa = text.substr(0, c1);
  const std::string sb = text.substr(c1 + 1, c2 - c1 - 1);
  const std::string sc = text.substr(c2 + 1);
  char* end = nullptr;
  const double a = std::strtod(sa.c_str(), &end);
  if (sa.empty() || *end != '\0') throw DomainError("bad grid start '" + sa + "'");
  const double b = std::strtod(sb.c_str(), &end);
  if (sb.empty() || *end != '\0') throw DomainError("bad grid end '" + sb + "'");
  const long count = std::strtol(sc.c_str(), &end, 10);
  if (sc.empty() || *end != '\0' || count > 10'000'000) {
    throw DomainError("bad grid count '" + sc + "'");
  }
  return make_grid(a, b, static_cast<int>(count));
}

}  // namespace darboux_dirac

namespace darboux_dirac::oscillator {

namespace {

// Product of the elementary factors of psi_n, given the jet of calL at u.
Jet assemble(const ModelParams& p, double x, int order, const Jet& x1_at_u) {
  const Jet t = Jet::variable(x, order);
  const Jet t2 = t * t;
  const Jet u = 0.5 * p.omega * t2;
  const Jet rational = powi(t, p.l + 1) / (p.omega * t2 + (2.0 * p.l + 1.0));
  const Jet gauss = exp(-0.25 * p.omega * t2);
  return rational * gauss * compose(x1_at_u, u);
}

specfun::LaguerreIndex x1_index(const ModelParams& p) { return {p.n + 1.0, p.l + 0.5}; }

void check_abscissa(double x) {
  if (!(x >= 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "eigenfunction evaluated at negative x=" << x;
    throw DomainError(os.str());
  }
}

}  // namespace

void validate(const ModelParams& p) {
  if (!(p.omega > 0.0)) throw DomainError("omega must be positive");
  if (p.l < 0) throw DomainError("l must be a nonnegative integer");
  if (!(p.m >= 0.0)) throw DomainError("m must be nonnegative");
  if (!std::isfinite(p.n)) throw DomainError("state index must be finite");
}

ModelParams with_index(ModelParams p, double n) {
  p.n = n;
  return p;
}

double potential_v0(const ModelParams& p, double x) {
  if (!(x > 0.0)) throw DomainError("V0 is defined for x > 0 only");
  const double w = p.omega;
  const double l = p.l;
  const double s = w * x * x + 2.0 * l + 1.0;
  return 0.25 * w * w * x * x + l * (l + 1.0) / (x * x) + 4.0 * w / s -
         8.0 * w * (2.0 * l + 1.0) / (s * s);
}

Potential potential(const ModelParams& p) {
  return [p](double x) { return potential_v0(p, x); };
}

double energy(const ModelParams& p) { return p.omega * (2.0 * p.n + p.l + 1.5); }

ScalarField eigenfunction(const ModelParams& p) {
  validate(p);
  const auto idx = x1_index(p);
  auto point = [p, idx](double x, int order) {
    check_abscissa(x);
    const double u0 = 0.5 * p.omega * x * x;
    return assemble(p, x, order, specfun::x1_laguerre(idx, u0, order));
  };
  auto batch = [p, idx](std::span<const double> xs, int order) {
    std::vector<double> us(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      check_abscissa(xs[i]);
      us[i] = 0.5 * p.omega * xs[i] * xs[i];
    }
    const auto x1 = specfun::x1_laguerre_batch(idx, us, order);
    std::vector<Jet> out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(assemble(p, xs[i], order, x1[i]));
    return out;
  };
  std::ostringstream name;
  name << "psi[n=" << p.n << "]";
  return ScalarField(point, name.str(), batch);
}

ScalarField normalized_eigenfunction(const ModelParams& p) {
  const auto w = numerics::normalization_window(p.omega);
  return numerics::normalize(eigenfunction(p), w.lo, w.hi);
}

double schrodinger_residual(const ScalarField& f, double epsilon, const Potential& v,
                            const Grid& g) {
  const auto jets = f.sample(g.points, 2);
  std::vector<double> residual(jets.size());
  std::vector<double> second(jets.size());
  std::vector<double> scaled_value(jets.size());
  for (std::size_t i = 0; i < jets.size(); ++i) {
    const double x = g.points[i];
    const double f0 = jets[i].derivative(0);
    const double f2 = jets[i].derivative(2);
    residual[i] = f2 + (epsilon - v(x)) * f0;
    second[i] = f2;
    scaled_value[i] = epsilon * f0;
  }
  const double scale =
      std::max({kernels::max_abs(second), kernels::max_abs(scaled_value), 1e-300});
  return kernels::max_abs(residual) / scale;
}

}  // namespace darboux_dirac::oscillator
