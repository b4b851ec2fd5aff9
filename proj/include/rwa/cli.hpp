// cli.hpp: argument parsing and dispatch for the rwa tool.

#pragma once

namespace rwa::cli {

enum ExitCode : int { ok = 0, usage_error = 1, numerical_failure = 2, acceptance_failure = 3 };

/// Parses argv, runs the subcommand and maps failures to exit codes.
int run(int argc, char** argv);

}  // namespace rwa::cli
