#include <iostream>

#include "ncspec_cli/cli.hpp"

int main(int argc, char** argv) {
  return ncspec::cli::run(argc, argv, std::cout, std::cerr);
}
