#include <iostream>
#include <string>
#include <vector>

#include "padicsum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return padicsum::cli::run(args, std::cout, std::cerr);
}
