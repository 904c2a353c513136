#include <iostream>

#include "resloc/cli.hpp"

int main(int argc, char** argv) {
  return resloc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
