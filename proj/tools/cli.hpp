#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sy {

/// Runs the syang front end on `args` (without the program name).
/// Returns 0 on success, 1 if a verification found failures, 2 on usage or config errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sy
