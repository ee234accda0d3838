#include <iostream>

#include "dgalab/cli.hpp"

int main(int argc, char** argv) {
  return dgalab::run_cli(argc, argv, std::cout, std::cerr);
}
