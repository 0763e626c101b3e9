#include <iostream>

#include "ged/cli.h"

int main(int argc, char** argv) {
  return ged::RunCli(argc, argv, std::cout, std::cerr);
}
