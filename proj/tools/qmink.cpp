#include <iostream>
#include <string>
#include <vector>

#include "qmink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qmink::cli::main_with_args(args, std::cout, std::cerr);
}
