#include <iostream>
#include <string>
#include <vector>

#include "trigspectra/cli.hpp"

int main(int argc, char** argv) {
  return trigspectra::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
