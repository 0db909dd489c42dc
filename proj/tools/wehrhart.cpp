#include <iostream>
#include <string>
#include <vector>

#include "wehrhart/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return wehrhart::cli::run_cli(args, std::cout, std::cerr);
}
