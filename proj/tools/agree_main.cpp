#include <iostream>
#include <string>
#include <vector>

#include "agree/cli.hpp"

int main(int argc, char** argv) {
  return agree::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
