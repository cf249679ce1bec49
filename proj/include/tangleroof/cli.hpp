#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tangleroof::cli {

/// Exit codes of the `tangleroof` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFalsified = 2;

inline constexpr std::uint64_t kDefaultSeed = 20240;

/// TANGLEROOF_SEED if set and parseable, else kDefaultSeed.
std::uint64_t default_seed();

/// Runs the tool on `args` (program name excluded), writing normal output to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tangleroof::cli
