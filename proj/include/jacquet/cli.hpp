#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacquet {

enum ExitCode { kExitOk = 0, kExitInput = 2, kExitUnsupported = 3 };

// Runs the jacquet command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacquet
