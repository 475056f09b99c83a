#include <iostream>
#include <string>
#include <vector>

#include "leapfrog/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return leapfrog::cli::run(args, std::cout, std::cerr);
}
