#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcolor::cli {

/// Exit statuses shared by every subcommand.
enum Status : int {
  verified = 0,
  refuted = 1,
  inconclusive = 2,
  input_error = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bcolor::cli
