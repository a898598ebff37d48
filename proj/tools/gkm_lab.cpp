#include <iostream>

#include "gkm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gkm::cli::run(args, std::cout, std::cerr);
}
