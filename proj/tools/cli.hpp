#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammae::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  ///< verify ran but at least one check failed
  kUsage = 2,
  kDomain = 3,
  kConvergence = 4,
  kInternal = 5,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammae::cli
