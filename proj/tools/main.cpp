#include <iostream>

#include "postlie/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return postlie::cli::run(args, std::cout, std::cerr);
}
