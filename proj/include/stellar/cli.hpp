#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stellar::cli {

/// Runs one command line (args[0] is the program name).
/// Returns 0 on success, 1 on a domain error, 2 on malformed input or usage.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace stellar::cli
