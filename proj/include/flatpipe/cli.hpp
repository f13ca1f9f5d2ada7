#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatpipe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

/// Runs one `flatpipe` invocation. `args` excludes the program name.
/// Results go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.9g") rendering used for every number the CLI emits.
std::string format_number(double value);

}  // namespace flatpipe::cli
