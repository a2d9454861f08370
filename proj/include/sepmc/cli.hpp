#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sepmc {

// Full command-line surface. args excludes the program name. Returns the
// process exit code: 0 on success, 1 when a verification check fails (a bound
// violated, or check-free finding the forbidden path), 2 on usage, input or
// oracle-limit errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepmc
