#include <iostream>

#include "dea/cli.hpp"

int main(int argc, char** argv) {
  return dea::cli::run_main(argc, argv, std::cout, std::cerr);
}
