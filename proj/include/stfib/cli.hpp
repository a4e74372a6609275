#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stfib::cli {

inline constexpr const char* kSchema = "stfib-cli/1";

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kNotCertified = 2,
  kUsage = 64,
};

/// Runs one command line (without the program name). Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stfib::cli
