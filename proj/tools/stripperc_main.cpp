#include <iostream>
#include <string>
#include <vector>

#include "stripperc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stripperc::run_cli(args, std::cout, std::cerr);
}
