#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gbp/error.hpp"

namespace gbp {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitPrecondition = 3,
  kExitLimit = 4,
  kExitVerifyFailed = 5,
};

int exit_code_for(ErrorCode code) noexcept;

// args excludes the program name. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbp
