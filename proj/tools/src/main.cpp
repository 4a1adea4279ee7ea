#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* env = std::getenv(qcoh::cli::kFieldEnv);
  return qcoh::cli::run(args, env ? env : "Q", std::cout, std::cerr);
}
