#include "ymheat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return ymheat::cli::main_entry(argc, argv, std::cout, std::cerr);
}
