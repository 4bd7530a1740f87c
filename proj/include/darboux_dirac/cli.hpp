#pragma once

// Command-line surface of the darboux_dirac tool. Everything is callable
// in-process so tests can drive the commands without spawning the binary.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "darboux_dirac/dirac.hpp"
#include "darboux_dirac/grid.hpp"
#include "darboux_dirac/oscillator.hpp"

namespace darboux_dirac::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kNumericalError = 3,
};

/// Default residual tolerance of `verify`, overridable through
/// DARBOUX_DIRAC_TOL.
inline constexpr double kDefaultTolerance = 1e-7;
inline constexpr const char* kToleranceEnv = "DARBOUX_DIRAC_TOL";

struct RunConfig {
  double omega = 1.0;
  int l = 1;
  double m = 1.0;
  std::vector<double> n{0.0, 1.0, 2.0};
  int order = 0;
  std::vector<double> aux;
  std::optional<double> c_const;
  Grid grid;
  dirac::Kind kind = dirac::Kind::pseudoscalar;
  int esign = 1;
  std::string out;
  bool crum_literal = false;
  double tolerance = kDefaultTolerance;

  oscillator::ModelParams params(double index = 0.0) const;
};

/// Default grid "0.1:8:400".
Grid default_grid();

/// Comma separated list of reals, e.g. "1.5,1.25". Throws DomainError.
std::vector<double> parse_list(const std::string& text);

/// Fixed CSV number format: 17 significant digits.
std::string format_number(double v);

void cmd_potential(const RunConfig& cfg, std::ostream& out);
void cmd_density(const RunConfig& cfg, std::ostream& out);
void cmd_darboux(const RunConfig& cfg, std::ostream& out);
void cmd_spectrum(const RunConfig& cfg, std::ostream& out);
/// Writes the report; returns kOk or kVerificationFailed.
int cmd_verify(const RunConfig& cfg, std::ostream& report);
/// CSV for figure 1..7 at its caption settings; only grid is taken from cfg.
void cmd_figure(int figure, const RunConfig& cfg, std::ostream& out);

/// Parses `args` (without the program name), runs the subcommand and maps
/// errors to exit codes: 2 for usage/domain errors, 3 for poles and
/// quadrature or series failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace darboux_dirac::cli
