#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anomaly::cli {

enum class ExitCode : int { Ok = 0, Failed = 1, Usage = 2 };

struct SuiteCase {
  std::string kind;  // "verify" or "audit"
  std::string id;
  int k = 0;
  int l = 0;
  int m = 0;
};

/// The acceptance grid in its fixed output order.
std::vector<SuiteCase> default_grid();

/// Runs the command line; everything is written to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anomaly::cli
