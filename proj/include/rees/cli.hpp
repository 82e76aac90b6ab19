#pragma once

#include <string>
#include <vector>

namespace rees {

// Run one rees-check command.  `args` are the command-line arguments without
// the program name.  Returns the process exit code: 0 on success, 1 when a
// check reports VIOLATION or a certificate/self-test fails, 2 on input
// errors, 3 when a --timeout budget expires.
int run_cli(std::vector<std::string> args);

}  // namespace rees
