#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cyclic::cli {

enum ExitCode : int {
    kOk = 0,
    kNotCyclic = 1,  ///< `check` verdict, or a failed witness/verification
    kUsage = 2,
    kUnknown = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses a positive count written as an integer or in scientific form
/// ("1e7"). Throws std::invalid_argument when not a positive integer.
std::uint64_t parse_count(std::string_view text);

}  // namespace cyclic::cli
