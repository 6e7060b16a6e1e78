// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kronstab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kRefused = 2,
  kIntegrity = 3,
};

/// Runs one invocation. argv[0] is the program name. Results go to `out`,
/// diagnostics and progress to `err`; `in` feeds `fit` when no --input is
/// given.
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kronstab::cli
