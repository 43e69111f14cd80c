#include <iostream>
#include <string>
#include <vector>

#include "weylkit/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weylkit::cli::run(args, std::cout, std::cerr);
}
