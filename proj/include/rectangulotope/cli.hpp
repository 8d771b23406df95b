#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rectangulotope {

/// Runs the command line `args` (program name excluded). Returns the exit
/// status: 0 on success, 1 when verification fails, 2 on malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rectangulotope
