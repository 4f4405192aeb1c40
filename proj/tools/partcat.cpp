#include <iostream>
#include <string>
#include <vector>

#include "partcat/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return partcat::cli::run_cli(args, std::cout, std::cerr);
}
