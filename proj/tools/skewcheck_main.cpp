#include <iostream>

#include "skewcheck/cli.hpp"

int main(int argc, char** argv) {
  return skewcheck::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
