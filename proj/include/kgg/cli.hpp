#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgg::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,
  usage_error = 2,
  undecided = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
/// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace kgg::cli
