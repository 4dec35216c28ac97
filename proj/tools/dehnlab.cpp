#include <iostream>

#include "dehnlab/cli.hpp"

int main(int argc, char** argv) {
  return dehnlab::run_cli(std::vector<std::string>(argv + 1, argv + argc),
                          std::cout, std::cerr);
}
