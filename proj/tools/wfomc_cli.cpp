#include <iostream>
#include <string>
#include <vector>

#include "wfomc/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wfomc::cli::run(args, std::cout, std::cerr);
}
