#include <iostream>
#include <string>
#include <vector>

#include "stardmp/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return stardmp::cli::run(args, std::cout, std::cerr);
}
