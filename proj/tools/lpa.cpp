#include <iostream>

#include "lpa/cli.hpp"

int main(int argc, char** argv) {
  return lpa::run_cli(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
