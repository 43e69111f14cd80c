#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

// Runs one command line (without the program name): mult, dim, classify or
// table. Results go to out, diagnostics and cache logging to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylkit::cli
