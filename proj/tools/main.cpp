#include <iostream>

#include "uprod/cli.hpp"

int main(int argc, char** argv) {
  return uprod::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
