#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chainsub::cli {

enum ExitCode : int { Success = 0, VerificationFailure = 1, InputFailure = 2 };

/// Runs one subcommand; args excludes the program name. JSON goes to out
/// (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainsub::cli
