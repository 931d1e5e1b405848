#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ssi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

/// Runs the command line (args excludes the program name). Never throws.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ssi::cli
