#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hibi::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kResource = 2,
  kAssertion = 3,
};

/// Runs one subcommand; `args` excludes the program name. Reports go to
/// `out` (or --out FILE), diagnostics prefixed "ERROR:" to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hibi::cli
