#include <iostream>
#include <string>
#include <vector>

#include "corpex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return corpex::cli::run(args, std::cout, std::cerr);
}
