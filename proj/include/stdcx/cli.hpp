#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stdcx::cli {

// Exit codes: 0 success, 1 invariant failure, 2 input error, 3 resource
// refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace stdcx::cli
