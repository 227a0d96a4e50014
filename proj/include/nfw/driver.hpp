#pragma once

#include <string>
#include <vector>

namespace nfw {

// Outcome of one command-line invocation.
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Full driver behind the `nfw` binary: argument parsing, problem-file
// loading, command dispatch, and JSON report assembly.  Exposed as a function
// so golden tests can run invocations in-process.  Never throws.
//
// Exit codes:
//   0  success (check: every selected check PASS; verify: every gated
//      identity holds)
//   1  a check FAILed / a gated identity does not hold
//   2  usage errors and input parse errors
//   3  checks finished INCONCLUSIVE without any FAIL
//   4  unexpected internal errors
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace nfw
