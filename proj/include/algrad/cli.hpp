#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algrad {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

/// Runs one CLI invocation; args excludes the program name.
/// Returns 0 on success, 1 when a verified property or oracle fails, 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algrad
