#pragma once

#include <string>
#include <vector>

#include "orthostab/json_io.hpp"

namespace orthostab {

struct CliResult {
  int exit_code = 0;
  json output;
  std::string out_path;  // empty: stdout
};

// Exit codes: 0 success / verified, 1 verification failed, 2 invalid input.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace orthostab
