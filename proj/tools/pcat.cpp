#include <iostream>
#include <string>
#include <vector>

#include "pcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pcat::cli::run(std::move(args), std::cout, std::cerr);
}
