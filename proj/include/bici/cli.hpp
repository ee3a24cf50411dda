#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bici::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 2,
  kCriterionViolation = 3,
  kOracleMismatch = 4,
};

/// "a,b;a,b;..." with arbitrary whitespace. Throws InvalidInput naming the
/// offending pair and its 1-based character offset.
std::vector<std::pair<long, long>> parse_bidegree_list(std::string_view text);

/// Runs one invocation; args excludes the program name. The report goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bici::cli
