#include <iostream>
#include <string>
#include <vector>

#include "incgrade/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return incgrade::run(args, std::cout, std::cerr);
}
