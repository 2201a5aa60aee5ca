#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace virtstring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace virtstring::cli
