#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tlc {

// Exit codes: 0 success, 1 usage, 2 input parse error, 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlc
