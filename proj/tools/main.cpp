#include <iostream>
#include <string>
#include <vector>

#include "platform_market/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pmkt::run_command(args, std::cout, std::cerr);
}
