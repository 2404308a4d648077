#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boss::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line, program name excluded. Usage errors return 2;
// runtime errors write a single diagnostic line to `err` and return 1.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boss::cli
