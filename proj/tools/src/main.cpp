#include <iostream>

#include "tlc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tlc::run(args, std::cout, std::cerr);
}
