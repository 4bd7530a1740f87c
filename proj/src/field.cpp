#include "darboux_dirac/field.hpp"

#include <sstream>
#include <utility>

#include "darboux_dirac/errors.hpp"

namespace darboux_dirac {

namespace {

std::string located(const char* what, double x) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (while evaluating at x=" << x << ")";
  return os.str();
}

}  // namespace

ScalarField::ScalarField(PointEval eval, std::string name, BatchEval batch)
    : eval_(std::move(eval)), batch_(std::move(batch)), name_(std::move(name)) {}

Jet ScalarField::operator()(double x, int order) const {
  if (!eval_) throw DomainError("evaluating an empty field");
  return eval_(x, order);
}

std::vector<Jet> ScalarField::sample(std::span<const double> xs, int order) const {
  if (batch_) return batch_(xs, order);
  std::vector<Jet> out;
  out.reserve(xs.size());
  for (double x : xs) {
    try {
      out.push_back((*this)(x, order));
    } catch (const PoleError&) {
      throw;  // already located
    } catch (const DomainError& e) {
      throw DomainError(located(e.what(), x));
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(located(e.what(), x));
    } catch (const DivergenceError& e) {
      throw DivergenceError(located(e.what(), x));
    }
  }
  return out;
}

ScalarField constant_field(double c, std::string name) {
  return ScalarField([c](double x, int order) { return Jet::constant(x, c, order); },
                     std::move(name));
}

ScalarField identity_field() {
  return ScalarField([](double x, int order) { return Jet::variable(x, order); }, "x");
}

ScalarField scaled(const ScalarField& f, double s) {
  return ScalarField([f, s](double x, int order) { return f(x, order) * s; }, f.name());
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return ScalarField([a, b](double x, int order) { return a(x, order) + b(x, order); },
                     a.name() + "+" + b.name());
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return ScalarField([a, b](double x, int order) { return a(x, order) - b(x, order); },
                     a.name() + "-" + b.name());
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return ScalarField([a, b](double x, int order) { return a(x, order) * b(x, order); },
                     a.name() + "*" + b.name());
}

}  // namespace darboux_dirac
