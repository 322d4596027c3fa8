#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copwin::cli {

// Full command driver, separated from main() so tests can run commands
// in-process and compare outputs byte for byte.
// Exit codes: 0 success, 1 invalid input, 2 internal limit exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace copwin::cli
