#include <iostream>
#include <string>
#include <vector>

#include "mcgdim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mcgdim::run_cli(args, std::cout, std::cerr);
}
