#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltaop::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFail = 1,
  kUsage = 2,
  kPrecision = 3,
};

/// Runs one command line. Summaries go to `out`, diagnostics to `err`;
/// machine-readable records are written to the files named by --out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace deltaop::cli
