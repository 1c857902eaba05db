#include <iostream>
#include <string>
#include <vector>

#include "kchi/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return kchi::main_entry(args, std::cout, std::cerr);
}
