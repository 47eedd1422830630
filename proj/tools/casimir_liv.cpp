#include <iostream>
#include <string>
#include <vector>

#include "casimir_liv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return casimir_liv::cli::main_entry(args, std::cout, std::cerr);
}
