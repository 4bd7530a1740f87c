#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "darboux_dirac/jet.hpp"

namespace darboux_dirac {

/// A real function of x that can produce its Jet of any requested order.
///
/// Fields are cheap to copy (the evaluators are shared closures) and
/// immutable once built. A field may carry a batch evaluator that sweeps a
/// whole list of abscissae at once; `sample` falls back to pointwise
/// evaluation when none is attached.
class ScalarField {
 public:
  using PointEval = std::function<Jet(double x, int order)>;
  using BatchEval = std::function<std::vector<Jet>(std::span<const double> xs, int order)>;

  ScalarField() = default;
  explicit ScalarField(PointEval eval, std::string name = {}, BatchEval batch = {});

  Jet operator()(double x, int order) const;
  double value(double x) const { return (*this)(x, 0).value(); }
  /// Jets at every abscissa. Evaluation errors are rethrown with the
  /// offending x in the message.
  std::vector<Jet> sample(std::span<const double> xs, int order) const;

  const std::string& name() const noexcept { return name_; }
  bool has_batch() const noexcept { return static_cast<bool>(batch_); }
  explicit operator bool() const noexcept { return static_cast<bool>(eval_); }

 private:
  PointEval eval_;
  BatchEval batch_;
  std::string name_;
};

ScalarField constant_field(double c, std::string name = "const");
/// t -> t; handy for building synthetic fields in tests and oracles.
ScalarField identity_field();
ScalarField scaled(const ScalarField& f, double s);
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);

}  // namespace darboux_dirac
