#include "vomas/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return vomas::cli::dispatch(vomas::cli::Args(argv + 1, argv + argc), std::cout, std::cerr);
}
