#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prisms/io.hpp"
#include "prisms/model.hpp"
#include "prisms/sweep.hpp"

namespace prisms {

enum class Subcommand : std::uint8_t { Exact, Simulate, Sweep, Lhv };

// Everything a run needs, resolved from the command line. The seed defaults
// to 0 so identical invocations are identical runs; wall-clock seeding only
// happens when --time-seed is passed explicitly.
struct RunConfig {
  Subcommand command = Subcommand::Exact;
  ModelParams params{};
  Regime regime = Regime::A;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  SweepSpec sweep{};
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> out_path;          // stdout when absent
  std::optional<std::string> plot_script_path;  // sweep only
};

// Raised for malformed or out-of-range command lines; the message names the
// offending flag. The CLI maps it to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses without executing. `args` excludes the program name. Throws
// UsageError on anything invalid, including domain bounds (odd n, epsilon
// or rho outside [0, 1]).
RunConfig parse_cli(const std::vector<std::string>& args);

// Full entry point used by main(): parse, execute, emit. Returns the
// process exit code: 0 on success, 2 for usage errors, 1 for runtime
// failures such as an unwritable output path.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Executes an already-parsed config, writing the document to `out` (or the
// config's out_path when set). Throws on runtime failures.
void run_config(const RunConfig& config, std::ostream& out);

}  // namespace prisms
