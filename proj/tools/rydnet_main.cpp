#include <iostream>

#include "rydnet/config.hpp"

int main(int argc, char** argv) {
  return rydnet::cli::run_cli(argc, argv, std::cout, std::cerr);
}
