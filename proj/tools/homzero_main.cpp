#include <iostream>
#include <string>
#include <vector>

#include "homzero/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homzero::cli::run(args, std::cout, std::cerr);
}
