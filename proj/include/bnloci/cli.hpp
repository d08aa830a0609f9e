#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnloci {

/// Command-line front end.  `args` excludes the program name.  Reports go
/// to `out`, diagnostics to `err`.  Exit status: 0 on success, 1 on invalid
/// input, 2 on an internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnloci
