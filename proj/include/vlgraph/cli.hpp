// Command-line front end. Kept in the library so tests can drive it.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vlgraph::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInfeasible = 2,
  kReferenceMismatch = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlgraph::cli
