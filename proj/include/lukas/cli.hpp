#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lukas::cli {

enum ExitCode : int {
  ok = 0,
  internal_error = 1,
  usage_error = 2,
  infinite_family = 3,
  oracle_cap_exceeded = 4,
  engine_disagreement = 5,
  engine_not_applicable = 6,
  bfile_unreadable = 7,
  bfile_mismatch = 8,
  selftest_failed = 9,
  invalid_query = 10,
};

/// Runs the `lukas` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory of the shipped b-file snapshots.
std::string default_fixture_dir();

}  // namespace lukas::cli
