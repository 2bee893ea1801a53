#pragma once

// The four CLI commands as functions producing named text artifacts.

#include <string>
#include <utility>
#include <vector>

#include "fsimple/config.hpp"

namespace fsimple {

struct CommandOutput {
  std::string primary;                                      // printed when no output directory is set
  std::vector<std::pair<std::string, std::string>> files;   // name -> content, written under cfg.out
};

CommandOutput cmd_build(const RunConfig& cfg);
CommandOutput cmd_census(const RunConfig& cfg);
CommandOutput cmd_dim(const RunConfig& cfg);
CommandOutput cmd_report(const RunConfig& cfg);

// Runs a command by name ("build", "census", "dim", "report"), writes the
// artifacts, and maps errors to exit codes: 0 success, 1 computational
// failure, 2 configuration error.
int run_command(const std::string& name, const RunConfig& cfg);

}  // namespace fsimple
