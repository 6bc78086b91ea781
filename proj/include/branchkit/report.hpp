// Report assembly and the command-line driver. Reports are deterministic for
// a fixed instance file, tool version and seed: keys are emitted sorted and
// wall-clock timing goes to stderr only, never into the report body.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace branchkit {

inline const char* kToolName = "branchkit";
inline const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Exit codes: 0 success, 1 invalid input, 2 hypothesis violated,
// 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branchkit
