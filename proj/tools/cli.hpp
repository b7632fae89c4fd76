#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitspin::cli {

/// Runs the command line against the given streams; returns the process exit
/// code (0 success, 2 argument errors, 1 runtime errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace splitspin::cli
