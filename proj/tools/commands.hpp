#pragma once

#include <iosfwd>

namespace layered::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInversion = 4;

/// Parses arguments, runs one subcommand and maps library errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace layered::cli
