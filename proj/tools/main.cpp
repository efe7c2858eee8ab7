#include <iostream>
#include <string>
#include <vector>

#include "spikegraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spikegraph::cli::run(args, std::cout, std::cerr);
}
