#include <iostream>
#include <string>
#include <vector>

#include "skewopt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return skewopt::cli::run(args, std::cout, std::cerr);
}
