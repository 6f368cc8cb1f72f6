#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spm::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spm::cli
