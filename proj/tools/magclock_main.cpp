#include <iostream>

#include "magclock/cli.hpp"

int main(int argc, char** argv) {
  return magclock::cli::run(argc, argv, std::cout, std::cerr);
}
