#pragma once

#include <string>
#include <vector>

#include "liaison/report.hpp"
#include "liaison/session.hpp"

namespace liaison {

struct CommandOptions {
  Window window;         // base verification window (checks widen it as needed)
  bool oracle = false;   // cross-check Hilbert data against the dense oracle
  bool certify = false;  // upgrade liaison identities to isomorphism certificates
  int max_degree = 12;   // degree cap for oracle and certificate work
};

struct CommandResult {
  std::string report;  // serialized report document (JSON, trailing newline)
  int exit_code = 0;   // 0 = all pass, 2 = inconclusive present, 1 = failure
};

// Dispatch one command against a parsed session.  `args` holds the command
// name followed by its arguments, e.g. {"resolve", "E1"} or
// {"check-surface", "E2", "via", "b22"}; link-taking commands accept either
// a declared link name or the inline `<ideal> via <ideal>` form.  Never
// throws: operation errors become a failing `error.<code>` check with exit
// code 1.  Identical inputs produce byte-identical reports.
CommandResult run_command(const SessionFile& session,
                          const std::vector<std::string>& args,
                          const CommandOptions& opts);

// The command vocabulary, for usage messages and validation.
const std::vector<std::string>& command_names();

}  // namespace liaison
