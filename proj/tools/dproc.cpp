#include <iostream>
#include <string>
#include <vector>

#include "dproc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dproc::cli::run(args, std::cout, std::cerr);
}
