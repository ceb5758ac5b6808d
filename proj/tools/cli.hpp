#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzywin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "0.4" as a fraction and "40%" as a percent. Throws Error(target_out_of_range).
double parse_target(const std::string& text);

}  // namespace fuzzywin::cli
