#pragma once

// Command-line front end. Every command is also reachable as a JSON request
// (command name plus an object of options named like the long flags), which
// is what batch files contain.

#include "twistlab/report.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace twistlab::cli {

/// 0 success, 1 condition unmet (report still produced), 2 malformed input.
struct Outcome {
  int exit_code = 0;
  Json report;             // envelope; holds "error" in result on failure
  std::string diagnostic;  // set for exit code 2
};

/// command: analyze | thurston | minword | ratio | raag | farey dist |
/// farey verify | farey export. Relative paths resolve against base_dir.
Outcome execute(const std::string& command, const Json& params, const std::filesystem::path& base_dir = {});

/// One JSON line per instance, then {"pass":N,"fail":M}. Returns 0 when every
/// instance passed, 1 otherwise.
int run_batch(std::istream& in, const std::filesystem::path& base_dir, std::ostream& out);

/// argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistlab::cli
