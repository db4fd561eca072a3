#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace legprod::cli {

// Runs one command line (args excludes the program name). Returns the process exit code:
// 0 success, 1 domain error, 2 I/O or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legprod::cli
