#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qchrom::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,          // success / certificate accepted
  kUsageError = 1,  // bad flags, unreadable input, structural mismatch
  kRejected = 2,    // verification or property check failed
};

/// Runs the CLI with argv-style arguments (argv[0] is the program name).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same as above; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qchrom::cli
