#include <iostream>
#include <string>
#include <vector>

#include "latcube/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latcube::cli::run(args, std::cout, std::cerr);
}
