#include <iostream>
#include <string>
#include <vector>

#include "darboux_dirac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return darboux_dirac::cli::run(args, std::cout, std::cerr);
}
