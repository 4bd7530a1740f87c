#pragma once

// The invariant suite behind `darboux_dirac verify`.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "darboux_dirac/darboux.hpp"
#include "darboux_dirac/oscillator.hpp"

namespace darboux_dirac::verify {

enum class Expect {
  below,  // value < tolerance passes
  above,  // value > tolerance passes (negative controls)
};

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  Expect expect = Expect::below;
  bool passed = false;
  std::string note;
};

struct Settings {
  oscillator::ModelParams params;  // n is ignored
  std::vector<double> states{0.0, 1.0, 2.0};
  /// First-order auxiliary index used by the Darboux checks.
  std::vector<double> aux{-0.5};
  std::optional<double> c_const;
  double tolerance = 1e-7;
  darboux::CrumReading crum = darboux::CrumReading::second_log_derivative;
};

std::vector<Check> run_suite(const Settings& s);

/// One line per check plus a summary; returns true when every check passed.
bool print_report(const std::vector<Check>& checks, std::ostream& os);

}  // namespace darboux_dirac::verify
