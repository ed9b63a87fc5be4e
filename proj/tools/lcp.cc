#include <iostream>

#include "lcp/cli.h"

int main(int argc, char** argv) {
  return lcp::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
