#include <iostream>

#include "idyn/cli.hpp"

int main(int argc, char** argv) {
  return idyn::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
