#include <iostream>
#include <string>
#include <vector>

#include "superorb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return superorb::run(args, std::cout, std::cerr);
}
