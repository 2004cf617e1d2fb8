#include <iostream>
#include <string>
#include <vector>

#include "forcing/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return forcing::run_cli(args, std::cout, std::cerr);
}
