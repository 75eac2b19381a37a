#ifndef UPROD_CLI_HPP
#define UPROD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace uprod::cli {

enum ExitCode : int {
  kOk = 0,
  kChecksFailed = 1,
  kMalformedInput = 2,
  kUndecided = 3,
};

/// Runs the uprod command line on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uprod::cli

#endif  // UPROD_CLI_HPP
