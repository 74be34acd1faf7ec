#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frob::cli {

inline constexpr const char* tool_version = "0.1.0";

/// Exit codes of the command-line tool.
enum Exit : int { ok = 0, invariant_failure = 1, precondition_failure = 2, usage = 64 };

/// Runs one command; `args` excludes the program name. JSON goes to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace frob::cli
