#ifndef MONOCONV_TOOLS_CLI_HPP_
#define MONOCONV_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace monoconv::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
};

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoconv::cli

#endif  // MONOCONV_TOOLS_CLI_HPP_
