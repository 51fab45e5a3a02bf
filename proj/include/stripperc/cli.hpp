#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stripperc {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitUsage = 2,
  kExitDegenerate = 3,
};

/// Entry point of the `stripperc` tool. `args` excludes the program name.
/// Results go to `out`; a single diagnostic line goes to `err` on failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stripperc
