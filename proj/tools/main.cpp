#include <iostream>

#include "chainsub/cli.hpp"

int main(int argc, char** argv) {
  return chainsub::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
