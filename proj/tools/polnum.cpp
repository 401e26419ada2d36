#include <iostream>
#include <string>
#include <vector>

#include "polnum/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polnum::cli::run(args, std::cout, std::cerr);
}
