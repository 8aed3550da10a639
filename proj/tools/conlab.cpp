#include <iostream>
#include <string>
#include <vector>

#include "conlab/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return conlab::run_cli(args, std::cout, std::cerr);
}
