#pragma once

#include <cstdint>
#include <string>

namespace parity {

enum ExitCode : int {
  kExitFeasible = 0,
  kExitInfeasible = 1,
  kExitError = 2,
  kExitBudget = 3,
};

struct RunReport {
  std::uint64_t digest = 0;
  std::string mode;
  bool feasible = false;
  std::size_t happy_size = 0;
  std::uint64_t wall_ns = 0;
  std::string solver_path;
  std::uint64_t seed = 0;
};

/// One JSON object on a single line.
std::string to_json(const RunReport& r);

/// Entry point of the `parity` tool. Returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace parity
