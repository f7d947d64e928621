#pragma once

#include <iosfwd>

namespace comaxg::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailVerdict = 1;
inline constexpr int kInputError = 2;

/// Entry point of the comaxg tool; argv[0] is the program name. Reports go
/// to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comaxg::cli
