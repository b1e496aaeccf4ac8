#include <iostream>

#include "homhopf/cli.hpp"

int main(int argc, char** argv) {
  return homhopf::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
