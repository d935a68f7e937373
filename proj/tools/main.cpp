#include <iostream>
#include <string>
#include <vector>

#include "gathering/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gathering::cli::run(args, std::cout, std::cerr);
}
