#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rog {

// Drives the whole tool. Exit codes: 0 success (and, for verify, all claims
// held), 1 internal error or failed claim, 2 usage error, 3 claims skipped
// under --strict. Diagnostics go to err only.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rog
