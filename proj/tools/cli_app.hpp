#pragma once

#include <ostream>

namespace hw::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 2;
inline constexpr int kNumericalError = 3;

/// Runs one command line. Results go to `out` unless --output names a file;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hw::cli
