#pragma once

#include <string>
#include <vector>

namespace hedgehog {

// Runs one CLI invocation; args are in argv order without the program
// name. Returns the process exit code: 0 success, 2 usage error, 3 domain
// error.
int cli_run(std::vector<std::string> args);

}  // namespace hedgehog
