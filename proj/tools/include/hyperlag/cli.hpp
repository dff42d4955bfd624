#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlag::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name). Reports go to `out`
/// unless `-o` names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hyperlag::cli
