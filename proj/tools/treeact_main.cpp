#include <iostream>

#include "treeact/cli.hpp"

int main(int argc, char** argv) {
  return treeact::cli::run(argc, argv, std::cout, std::cerr);
}
