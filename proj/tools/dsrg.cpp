#include <iostream>
#include <string>
#include <vector>

#include "dsrg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dsrg::cli::run(args, std::cout, std::cerr);
}
