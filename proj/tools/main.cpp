// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "rrhmux/cli.hpp"

int main(int argc, char** argv) {
  return rrhmux::run_cli(argc, argv, std::cout, std::cerr);
}
