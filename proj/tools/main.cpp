#include <iostream>
#include <string>
#include <vector>

#include "multgen/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return multgen::run_cli(args, std::cout, std::cerr);
}
