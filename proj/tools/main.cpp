#include <iostream>

#include "strimp/cli.hpp"

int main(int argc, char** argv) {
  return strimp::run_cli(argc, argv, std::cout, std::cerr);
}
