#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "conformal_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return conformal::cli::run_cli(args, std::cout, std::cerr, std::getenv("CONFORMAL_COHERENT_SEED"));
}
