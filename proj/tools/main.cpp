#include <iostream>
#include <string>
#include <vector>

#include "tansec/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tansec::cli::run(args, std::cout, std::cerr);
}
