#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfdir {

// Command-line front end. Exit codes: 0 success, 1 input or usage error,
// 2 a verified mathematical property failed to hold (implementation bug).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perfdir
