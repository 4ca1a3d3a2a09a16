#pragma once

#include <string>
#include <vector>

namespace lpict::cli {

struct CliResult {
  int exit = 0;  // 0 secure/valid, 1 flawed/invalid, 2 usage or input error
  std::string out;
  std::string err;
};

// Runs one command; `args` excludes the program name.  Text output is
// colored when LPICT_COLOR=1.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace lpict::cli
