// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "crosscap/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return crosscap::cli::run(args, std::cout, std::cerr);
}
