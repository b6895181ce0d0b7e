#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmkt {

// Exit codes: 0 success, 1 usage error, 2 verification failure.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace pmkt
