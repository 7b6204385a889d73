#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace rigid::cli {

inline constexpr std::uint64_t kDefaultSeed = 1;

enum Status : int {
  kOk = 0,
  kUsage = 1,
  kParseFailure = 2,
  kPrecondition = 3,
  kOracleDisagreement = 4,
};

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`; the return value is the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigid::cli
