#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lie3 {

/// Runs the command line (without the program name). Returns 0 on success,
/// 1 when a check fails and 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lie3
