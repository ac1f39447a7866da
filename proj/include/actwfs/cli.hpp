#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace actwfs::cli {

/// Exit codes.
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

/// Runs one command; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace actwfs::cli
