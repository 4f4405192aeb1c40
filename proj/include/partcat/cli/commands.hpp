#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "partcat/cli/report.hpp"
#include "partcat/cli/vector_io.hpp"

namespace partcat::cli {

/// Process exit codes: affirmative verdict, negative verdict, usage/parse error.
enum ExitCode : int { kAffirmative = 0, kNegative = 1, kUsage = 2 };

struct GlobalOptions {
  int digits = 6;
  bool unnormalized = false;
  std::uint64_t seed = 20240501;
  bool quiet = false;
};

struct CommandOutput {
  json report;       // structured document (empty for tabular commands)
  std::string table; // CSV body for tabular commands
  int exit_code = kAffirmative;
};

CommandOutput cmd_prob(const VectorInput& x, const VectorInput& y, const GlobalOptions& opt);
CommandOutput cmd_check(const VectorInput& x, const VectorInput& y, const VectorInput& c, const GlobalOptions& opt);

struct FindArgs {
  std::optional<std::size_t> k;
  bool min_dim = false;
  std::optional<std::size_t> grid;
};
CommandOutput cmd_find(const VectorInput& x, const VectorInput& y, const FindArgs& args, const GlobalOptions& opt);

struct SetArgs {
  Rat lambda;
  std::string op;  // extremes | equals-s | boundary | membership
  std::optional<VectorInput> x;
  std::optional<VectorInput> c;
  std::size_t k = 2;
  std::size_t grid = 24;
};
CommandOutput cmd_set(const VectorInput& y, const SetArgs& args, const GlobalOptions& opt);

struct SimplexArgs {
  Rat lambda;
  std::size_t resolution = 50;
  std::string set = "S";  // S | Tk
  std::size_t k = 2;
  std::size_t grid = 24;
};
CommandOutput cmd_simplex(const VectorInput& y, const SimplexArgs& args, const GlobalOptions& opt);

/// Randomized invariant sweep (seeded): Nielsen equivalence, the three
/// S^λ membership routes, concavity, direct-sum and tensor bounds, and the
/// agreement of the combinatorial catalyst test with the direct one.
CommandOutput cmd_props(std::size_t trials, const GlobalOptions& opt);

/// Full command-line entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partcat::cli
