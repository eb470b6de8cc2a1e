#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace domir::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kVerificationFailure = 3,
};

inline constexpr const char* kVersion = "domir 0.1.0";
/// Environment variable holding the worker count for bench and the CDS solvers.
inline constexpr const char* kWorkersEnv = "DOMIR_WORKERS";

/// Entry point behind main(); `args` excludes the program name. Reports go
/// to `out` as JSON Lines, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domir::cli
