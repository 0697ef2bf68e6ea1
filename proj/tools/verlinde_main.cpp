#include <iostream>
#include <string>
#include <vector>

#include "verlinde/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return verlinde::cli::run(args, std::cout, std::cerr);
}
