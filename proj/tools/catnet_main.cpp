#include <iostream>
#include <string>
#include <vector>

#include "catnet/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return catnet::cli::run(args, std::cout, std::cerr);
}
