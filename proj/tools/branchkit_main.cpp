#include <iostream>
#include <vector>

#include "branchkit/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return branchkit::run_cli(args, std::cout, std::cerr);
}
