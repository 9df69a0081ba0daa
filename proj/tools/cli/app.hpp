#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobscan::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCacheDirEnv = "FROBSCAN_CACHE_DIR";

enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitMismatch = 2,
};

/// Parses argv, runs one command and writes its report to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobscan::cli
