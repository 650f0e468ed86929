#include <iostream>

#include "qchrom/cli.hpp"

int main(int argc, char** argv) {
  return qchrom::cli::run(argc, argv, std::cout, std::cerr);
}
