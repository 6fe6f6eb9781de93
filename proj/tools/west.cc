#include "west/cli.hh"

#include <iostream>

int main(int argc, char **argv) {
  return west::run_cli(argc, argv, std::cout, std::cerr);
}
