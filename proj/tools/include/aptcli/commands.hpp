#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace aptcli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kNotASolution = 3,
  kVerificationFailed = 4,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "5", "p=5", "5,41" (repeatable). Throws std::invalid_argument.
std::vector<std::int64_t> parse_pillars(const std::vector<std::string>& specs);

}  // namespace aptcli
