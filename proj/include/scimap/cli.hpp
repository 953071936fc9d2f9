#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scimap::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs `scimap <command> [options]`. Returns the process exit code; results
/// go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace scimap::cli
