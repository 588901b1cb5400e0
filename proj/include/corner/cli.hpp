#pragma once

#include <string>
#include <vector>

namespace corner {

struct RunResult {
  int exit_code = 0;   // 0 ok, 1 verification counterexample, 2 input error
  std::string report;  // JSON document, newline terminated
};

/// Executes one batch command (close, orderings, reduce, limit, signature,
/// verify-order, verify-injective, nbody). args excludes the program name.
RunResult run_job(const std::vector<std::string>& args);

}  // namespace corner
