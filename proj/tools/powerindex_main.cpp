#include <iostream>
#include <string>
#include <vector>

#include "powerindex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return powerindex::run_cli(args, std::cout, std::cerr);
}
