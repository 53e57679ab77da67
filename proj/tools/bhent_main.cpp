#include <iostream>
#include <string>
#include <vector>

#include "bhent/sweep.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bhent::run_cli(args, std::cout, std::cerr);
}
