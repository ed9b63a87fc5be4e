#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lcp {

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. `plan`: 0 solution, 1 no plan up to k_max, 2 error or
/// timeout. `validate`: 0 valid, 1 invalid, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcp
