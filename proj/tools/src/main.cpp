#include <iostream>

#include "redlab_cli/cli.hpp"

int main(int argc, char** argv) {
  return redlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
