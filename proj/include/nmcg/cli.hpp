#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nmcg::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. Input files named
/// "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nmcg::cli
