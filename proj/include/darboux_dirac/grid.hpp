#pragma once

#include <string>
#include <vector>

namespace darboux_dirac {

/// Uniform discretization of an interval of the half-line x > 0.
struct Grid {
  double xmin = 0.0;
  double xmax = 0.0;
  int count = 0;
  std::vector<double> points;
};

/// Throws DomainError unless 0 < xmin < xmax and count >= 2.
Grid make_grid(double xmin, double xmax, int count);

/// Parses "a:b:count".
Grid parse_grid(const std::string& text);

}  // namespace darboux_dirac
