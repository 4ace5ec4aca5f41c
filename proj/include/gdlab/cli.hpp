#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdlab {

// Full command-line surface; returns the process exit code
// (0 pass, 1 check failed, 2 input error).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gdlab
