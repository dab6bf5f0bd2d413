#pragma once

#include <string>
#include <vector>

namespace interactionkit::cli {

/// Entry point behind the `ikit` binary, separated so tests can invoke
/// subcommands in-process. Returns the process exit code; errors print a
/// single `error: ...` line on stderr.
int run(const std::vector<std::string>& args);

}  // namespace interactionkit::cli
