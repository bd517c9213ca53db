#include <iostream>

#include "kscyc/cli.hpp"

int main(int argc, char** argv) {
  return kscyc::cli::run_cli(argc, argv, std::cout, std::cerr);
}
