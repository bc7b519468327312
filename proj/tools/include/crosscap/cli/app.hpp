// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CROSSCAP_CLI_APP_HPP
#define CROSSCAP_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace crosscap::cli {

/// Process exit codes shared by every subcommand that reports a verdict.
enum ExitCode : int {
  kExitNotObstructed = 0,
  kExitUsage = 1,
  kExitObstructed = 2,
  kExitInvalid = 3,
};

/// Runs the command line `crosscap <args...>` (args excludes the program
/// name) and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crosscap::cli

#endif  // CROSSCAP_CLI_APP_HPP
