#ifndef WREATH_TOOLS_CLI_HPP
#define WREATH_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wreath::cli {

enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kUnknown = 2,
  kUsage = 3,
  kInternal = 4,
};

/// Runs the `wreath` command line with args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wreath::cli

#endif
