#pragma once

#include <string>
#include <vector>

namespace hessplus {

// Full command-line front end.  `args` excludes the program name.  Returns
// the process exit code: 0 success, 1 ground-truth failures, 2 bad input
// (parse/usage/constraint), 3 internal error.
int run_cli(const std::vector<std::string>& args);

}  // namespace hessplus
