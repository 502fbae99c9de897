#include <iostream>

#include "sfvs/cli.hpp"

int main(int argc, char** argv) {
  return sfvs::run_cli(argc, argv, std::cout, std::cerr);
}
