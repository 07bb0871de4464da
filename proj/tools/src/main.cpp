#include <iostream>
#include <string>
#include <vector>

#include "aptcli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aptcli::run(args, std::cout, std::cerr);
}
