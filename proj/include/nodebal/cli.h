#pragma once

#include <iosfwd>

namespace nodebal {

// Exit codes: 0 the command reached a decision (feasible or not),
// 1 usage error, 2 unreadable or malformed input, 3 size/search budget hit.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;

// Runs the command line; the JSON result goes to `out`, diagnostics to
// `err`. Nothing is written to `out` on failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nodebal
