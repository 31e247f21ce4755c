#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wmult::cli {

// Dispatches one command line. Returns the process exit status:
//   0 success, 1 verification failure, 2 usage error.
// All regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wmult::cli
