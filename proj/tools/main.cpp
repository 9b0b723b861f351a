#include <iostream>

#include "ckc/cli.hpp"

int main(int argc, char** argv) {
  return ckc::cli::run(argc, argv, std::cout, std::cerr);
}
