#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace csinv::cli {

/// Runs one CLI invocation; args exclude the program name.
/// Exit codes: 0 conclusive / success, 2 nothing concluded, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csinv::cli
