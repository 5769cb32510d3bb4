#pragma once

// Library side of the `vinberg` command-line tool. Each command takes its
// raw input text and returns a CommandResult; the executable only parses
// flags and prints.

#include <cstddef>
#include <cstdint>
#include <string>

#include "vinberg/json_io.hpp"

namespace vinberg::cli {

enum class Status { ok, domain_error, convergence_error, inconsistency, parse_error };

const char* to_string(Status s);

struct CommandResult {
  Status status = Status::ok;
  /// Written to standard output when status is ok.
  json payload;
  /// Diagnostic for the error stream when status is not ok.
  std::string message;

  int exit_code() const { return status == Status::ok ? 0 : 1 + static_cast<int>(status); }
};

/// `what` is one of cone, closed-cone, symplectic, G, upsilon, gamma,
/// gamma-sp. The payload is {"verdict": bool} plus "reason" when false.
CommandResult cmd_check(const std::string& input, const std::string& what, double tol);

/// `mode` is triple, gamma or polar. The payload holds the factors and the
/// recomposition residual.
CommandResult cmd_decompose(const std::string& input, const std::string& mode, double tol,
                            int max_iter = 100, double stop_tol = 1e-12);

CommandResult cmd_counterexample();

/// Runs the violation search. With a non-empty out_path, the violation CSV is
/// written there and the summary JSON next to it with a .json extension.
CommandResult cmd_search(std::uint64_t seed, std::size_t samples, const std::string& out_path,
                         bool inject_probe);

}  // namespace vinberg::cli
