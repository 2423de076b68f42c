#include <iostream>

#include "prisms/cli.hpp"

int main(int argc, char** argv) {
  return prisms::run_cli(argc, argv, std::cout, std::cerr);
}
