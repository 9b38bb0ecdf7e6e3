#pragma once

#include <iosfwd>

namespace zetalab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitPrecondition = 65;

// Parses argv, runs one subcommand and writes its artifact to --output or out.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetalab::cli
