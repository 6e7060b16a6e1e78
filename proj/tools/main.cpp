// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "kronstab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return kronstab::cli::run(args, std::cin, std::cout, std::cerr);
}
