#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "secular/ese.hpp"
#include "secular/models.hpp"

namespace secular::cli {

enum class Command { Series, Ese, Ep, Table, Check, Radius };
enum class OutputFormat { Human, Json, Csv };

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kNumericalFailure = 3,
  kModelError = 4,
};

/// Everything a run depends on; equal configs produce byte-identical
/// json and csv output.
struct RunConfig {
  Command command = Command::Table;
  ModelSpec model;
  std::string model_label = "mathieu-2pi-even";
  std::vector<std::size_t> states{1, 2};
  std::size_t order = 13;
  std::vector<std::size_t> orders{10, 11, 12, 13};
  TruncationMode mode = TruncationMode::Full;
  unsigned precision_bits = kDefaultPrecisionBits;
  OutputFormat format = OutputFormat::Human;
  std::uint64_t seed = RootOptions{}.seed;
  std::optional<std::string> lambda;
  /// Oracle matrix dimension for `check`.
  std::size_t oracle_dim = 40;
};

std::string to_string(Command command);

/// Parses "a..b" or a comma list ("10,12,13") into ascending orders.
std::vector<std::size_t> parse_orders(const std::string& text);
/// Parses "1,2,3".
std::vector<std::size_t> parse_states(const std::string& text);

/// Maps a library error to the process exit status.
ExitCode exit_code_for(ErrorKind kind);

/// Executes one configured run, writing the report to `out` and diagnostics
/// to `err`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace secular::cli
