#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgat {

// Command-line entry point, exposed for in-process testing.
// Exit codes: 0 success/agree, 1 structural error, 2 oracle disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bgat
