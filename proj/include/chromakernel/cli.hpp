#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ck {

// Exit codes: 0 success, 1 domain failure (no kernel, campaign failure,
// counterexample found), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ck
