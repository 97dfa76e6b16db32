#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ocha::cli {

/// Exit codes: 0 success, 1 a check failed, 2 bad usage or unreadable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocha::cli
