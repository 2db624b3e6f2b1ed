#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "plurality/documents.hpp"
#include "plurality/sequential.hpp"

namespace plurality {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitBoundExceeded = 3,
  kExitNoPne = 4,
};

struct CommandOptions {
  /// Contents of the input file (election or X3C JSON), if the command takes one.
  std::optional<std::string> input;
  Engine engine = Engine::automatic;
  bool skip_validate = false;
  int threads = 0;
  bool no_timing = false;
  std::uint64_t seed = 1;
  std::uint64_t max_states = SolveOptions{}.max_states;
  std::uint64_t max_table = SolveOptions{}.max_table;
  std::string ballots;  // pne-check
  int n_a = 0;          // mandate
  int n_b = 0;
  int k = 0;
  int n = 0;            // gen
  int m = 0;
};

struct CommandResult {
  ResultDocument document;
  int exit_code = kExitOk;
  /// Human-readable summary for stderr.
  std::string summary;
};

/// Runs one command: validate, pne-check, pne-find, pne-enum, pne-brute,
/// spne, spne-oracle, two-cand, mandate, reduce-x3c or gen. Input and bound
/// errors are reported through the exit code and an "error" entry in the
/// document details rather than thrown.
CommandResult run(const std::string& command, const CommandOptions& options);

}  // namespace plurality
