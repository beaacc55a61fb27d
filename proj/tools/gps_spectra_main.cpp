#include <iostream>
#include <string>
#include <vector>

#include "gps/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gps::cli::run_cli(args, std::cerr);
}
