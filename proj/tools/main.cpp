#include <iostream>
#include <string>
#include <vector>

#include "uninorm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uninorm::run_cli(args, std::cout, std::cerr);
}
