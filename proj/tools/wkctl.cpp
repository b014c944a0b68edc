#include <iostream>
#include <string>
#include <vector>

#include "wk/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return wk::cli::run(args, std::cout, std::cerr);
}
