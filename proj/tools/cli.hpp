#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polylog::cli {

// Full command dispatch; args excludes the program name. Returns the process
// exit code: 0 pass, 1 failed check, 2 usage error, 3 evaluation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polylog::cli
