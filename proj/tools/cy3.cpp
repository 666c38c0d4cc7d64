#include <iostream>
#include <string>
#include <vector>

#include "cy3/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cy3::cli::run_cli(args, std::cout, std::cerr);
}
