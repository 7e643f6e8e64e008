#include <iostream>

#include "distvar_cli/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return distvar::cli::run(args, std::cout, std::cerr);
}
