#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uninorm {

// Runs the command line (without the program name). Exit codes: 0 pass, 1 a mathematical
// property failed, 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uninorm
