#include <iostream>

#include "sextic/cli.hpp"

int main(int argc, char** argv) {
  return sextic::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
