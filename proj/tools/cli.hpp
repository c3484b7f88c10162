#pragma once

#include <iosfwd>

namespace bimlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // mismatch, non-functional, refuted
inline constexpr int kExitUsage = 2;      // bad arguments, unreadable or malformed files

/// Entry point of the `bimlab` tool; writes results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bimlab::cli
