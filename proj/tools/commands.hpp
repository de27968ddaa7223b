#pragma once

#include <ostream>
#include <string>

#include "run_config.hpp"

namespace spintorus::cli {

inline constexpr const char* kSchemaVersion = "spintorus-report/1";

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kConfigError = 2 };

struct CommandOptions {
  bool strict = false;
  bool csv = false;
  std::string out_dir;  // empty: output_path as given
};

struct CommandResult {
  int exit_code = kOk;
  Json report;
  std::string report_path;  // empty when nothing was written
};

// Runs one of verify|spectrum|bae|reconstruct|homog and writes its report.
// Config and invariant violations give kConfigError with the message on err.
[[nodiscard]] CommandResult run_command(const std::string& command, const RunConfig& config,
                                        const CommandOptions& options, std::ostream& err);

[[nodiscard]] bool is_command(const std::string& name);

}  // namespace spintorus::cli
