#pragma once

#include <iosfwd>

namespace nlpc {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitValidation = 2 };

/// Entry point of the `nlpc` tool (gen-data, compile, render).
/// Errors go to `err` as a human-readable line followed by a one-line JSON object.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nlpc
