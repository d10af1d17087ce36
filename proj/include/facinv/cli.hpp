#pragma once

#include <istream>
#include <string>
#include <vector>

namespace facinv::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,     // parse or validation error, wrong dimension
  kSemantic = 3,  // element not in semigroup, non-full input, overflow
  kResource = 4,  // --max-steps exhausted
};

struct RunResult {
  int exit_code = kOk;
  std::string out;  // empty unless the command succeeded (or printed help)
  std::string err;
};

/// Runs one command. `args` excludes the program name; `in` backs "--gens -".
[[nodiscard]] RunResult run(const std::vector<std::string>& args, std::istream& in);

}  // namespace facinv::cli
