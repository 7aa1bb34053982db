#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
  return stableflow::RunCli(argc, argv, std::cout, std::cerr);
}
