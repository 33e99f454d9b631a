#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scfact {

/// Command-line front end, callable in-process for testing.
/// args excludes the program name. Returns the process exit code:
/// 0 success, 2 validation error, 3 computation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace scfact
