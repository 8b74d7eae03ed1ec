#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mcde::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and usage text for errors to `err`; `in` backs
/// "--input -" and the monitor.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mcde::cli
