#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multgen {

// Entry point shared by the binary and the tests. Exit codes:
//   0 success, 1 parse error, 2 input not algebraic, 3 theorem violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multgen
