#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybme {

/// Seed used when no --seed is given, so repeated runs agree by default.
inline constexpr std::uint64_t kDefaultSeed = 20250822;

/// Runs one command line (args exclude the program name).  Rendered output
/// goes to out unless --out redirects it to a file; diagnostics go to err.
/// Returns the process exit status: 0 on success or a passing verification,
/// 1 when any verification record fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ybme
