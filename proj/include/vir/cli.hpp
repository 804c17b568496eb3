#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vir::cli {

/// Exit codes: 0 success, 1 a checked property failed, 2 invalid input.
enum Exit : int { ok = 0, property_failed = 1, invalid_input = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vir::cli
