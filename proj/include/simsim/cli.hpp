#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simsim::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;
inline constexpr int kBadInput = 65;
inline constexpr int kInternal = 70;

inline constexpr const char* kVersion = "0.1.0";

/// Runs one invocation. args[0] is the program name. The result document goes
/// to `out`; diagnostics go to `err` only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simsim::cli
