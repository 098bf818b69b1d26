#include <iostream>
#include <string>
#include <vector>

#include "claws/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return claws::run(args, std::cout, std::cerr);
}
