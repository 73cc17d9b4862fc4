#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace dproc::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kAlphabetTooLarge = 3,
  kUnknownActivity = 4,
  kDegenerateProcess = 5,
  kMismatchedStakeholders = 6,
  kOtherError = 7,
  kUsage = 64,
};

/// Brute-force limit from DPROC_MAX_ALPHABET, or the library default.
std::size_t max_alphabet_from_env();

/// Runs the `dproc` command line. args[0] is the program name. The report
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dproc::cli
