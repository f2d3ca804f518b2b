#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qdirac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the qdirac tool. Writes results to out and diagnostics to
/// err; returns the process exit status.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same, with argv[0] omitted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdirac::cli
