#include <iostream>
#include <string>
#include <vector>

#include "spechtlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spechtlab::run(args, std::cout, std::cerr);
}
