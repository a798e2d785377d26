#pragma once

#include <string>

namespace fraclab {

struct RunResult {
  // 0 success, 1 verification failure, 2 configuration error, 3 numerical
  // failure.
  int exit_code = 0;
  std::string report_json;
};

// Executes one subcommand described by a flat JSON config ({"command": ...,
// flag keys...}).  Unknown keys are rejected.  Artifacts (CSV/SVG plus a
// copy of the report) go to the "out" directory when one is given.
RunResult run_command(const std::string& config_json);

const char* version_string();

} // namespace fraclab
