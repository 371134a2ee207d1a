#pragma once

#include <ostream>

namespace rdrd::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2 };

/// Entry point of the `rdrd` tool. The payload goes to `out`, diagnostics
/// and usage text to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rdrd::cli
