#include <iostream>

#include "lukas/cli.hpp"

int main(int argc, char** argv) {
  return lukas::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
