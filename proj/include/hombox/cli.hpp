#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hombox {

// Exit codes of the command-line tool.
enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

// Runs one hombox command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hombox
