#include <iostream>

#include "wrightlens/cli.hpp"

int main(int argc, char** argv) {
  return wrightlens::cli::run(argc, argv, std::cout, std::cerr);
}
