#include <unistd.h>

#include <iostream>

#include "goeritz/cli.hpp"

int main(int argc, char** argv) {
  return goeritz::cli::main_entry(argc, argv, std::cin, isatty(STDIN_FILENO) != 0, std::cout, std::cerr);
}
